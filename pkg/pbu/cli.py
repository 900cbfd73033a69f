'''
cli
===

The ``pbu`` command.  Each subcommand is one step of the unification
workflow: set up a workspace, map, verify, report, follow a new version of
an approach, refine the process, analyse the source documents, export and
document decisions.

Results go to standard output as tab-separated rows, diagnostics go to
standard error through :mod:`logging`.  The exit status is ``0`` on
success, ``1`` when a verification or appraisal has findings and ``2`` on
usage, parse or I/O errors.

.. autofunction:: run
.. autofunction:: main
'''
import argparse, logging, os, sys
from . import __version__
from .analysis import (MiningConfig, coupling_stats, extract_cross_references,
                       reference_matrix, tokenize_and_count)
from .errors import PBUException
from .fixtures import FIXTURES
from .formats.corpus import CorpusReader, read_area_names, read_lines
from .graphs import containment_graph, export_dot, flow_graph
from .model import Workspace
from .unifier import ProcessUnifier
from .workspace import append_decision, load_workspace, save_workspace

EXIT_OK, EXIT_FINDINGS, EXIT_ERROR = 0, 1, 2
COVERAGE_COLUMNS = ('group', 'label', 'total', 'mapped', 'excluded',
                    'unaccounted', 'mapped_ratio', 'accounted_ratio')

log = logging.getLogger(__name__)


def _emit(out, *fields):
    out.write('\t'.join(str(f) for f in fields) + '\n')


def _unifier(args):
    if not (args.workspace or os.getenv('PBU_WORKSPACE')):
        raise CliError('no workspace given: use --workspace or set '
                       'PBU_WORKSPACE')
    return ProcessUnifier(args.workspace, actor=args.actor)


class CliError(Exception):
    '''
    A problem with the command line itself, reported with exit status 2.
    '''


###############################################################################
# workspace set-up and decisions
###############################################################################
def cmd_init(args, out):
    path = args.workspace or os.getenv('PBU_WORKSPACE')
    if not path:
        raise CliError('init needs --workspace or PBU_WORKSPACE')
    if os.path.exists(os.path.join(path, 'workspace.meta')):
        raise CliError('{} already holds a workspace'.format(path))
    ws = FIXTURES[args.fixture]() if args.fixture else Workspace()
    save_workspace(ws, path)
    _emit(out, 'initialized', path)
    return EXIT_OK


def cmd_log_decision(args, out):
    pbu = _unifier(args)
    record = append_decision(pbu.path, args.actor or os.getenv('PBU_ACTOR',
                             'pbu'), args.context, args.decision,
                             args.rationale)
    _emit(out, record.timestamp, record.actor, record.context,
          record.decision, record.rationale)
    return EXIT_OK


def cmd_staging(args, out):
    _emit(out, _unifier(args).processes.create_staging(args.approach))
    return EXIT_OK


def cmd_import_xml(args, out):
    _emit(out, _unifier(args).processes.import_xml(
        args.file, replace_existing=args.replace))
    return EXIT_OK


###############################################################################
# mappings and exclusions
###############################################################################
def cmd_map(args, out):
    _emit(out, _unifier(args).mappings.add(args.process, args.qa, args.node,
          primary_source=args.primary, note=args.note))
    return EXIT_OK


def cmd_mappings(args, out):
    pbu = _unifier(args)
    if args.approach:
        mappings = pbu.mappings.for_approach(args.approach, args.process)
    else:
        mappings = pbu.mappings.list(args.process)
    _emit(out, 'id', 'kind', 'primary_source', 'qa_ids', 'node_ids', 'note')
    for mapping in mappings:
        _emit(out, mapping.id, pbu.mappings.classify(mapping).value,
              mapping.primary_source or '', '; '.join(sorted(mapping.qa_ids)),
              '; '.join(sorted(mapping.node_ids)), mapping.note)
    return EXIT_OK


def cmd_remove_mapping(args, out):
    _unifier(args).mappings.remove(args.process, args.mapping,
                                   rationale=args.rationale)
    _emit(out, 'removed', args.mapping)
    return EXIT_OK


def cmd_exclude(args, out):
    exclusion = _unifier(args).coverage.exclude(args.qa_id, args.rationale)
    _emit(out, 'excluded', exclusion.qa_id)
    return EXIT_OK


def cmd_verify(args, out):
    pbu = _unifier(args)
    findings = list(pbu.mappings.verify(args.process))
    findings += list(pbu.processes.validate(args.process))
    for finding in findings:
        _emit(out, finding.severity, finding.code,
              ','.join(finding.subject_ids), finding.message)
    errors = [f for f in findings if f.severity == 'error']
    if errors:
        log.error('%d verification errors in %s', len(errors), args.process)
        return EXIT_FINDINGS
    return EXIT_OK


def cmd_trace(args, out):
    pbu = _unifier(args)
    if args.from_source:
        for node_id in sorted(pbu.mappings.trace_to_process(
                args.from_source, args.process)):
            _emit(out, node_id)
    else:
        traced = pbu.mappings.trace_to_sources(args.from_node, args.process)
        for aid, qa_ids in traced.items():
            for qa_id in qa_ids:
                _emit(out, aid, qa_id)
    return EXIT_OK


###############################################################################
# reports
###############################################################################
def _coverage_text(report, out):
    out.write('Coverage of {}{}\n'.format(report.approach_id,
        ' ({})'.format(report.level_filter.value)
        if report.level_filter else ''))
    total = report.total
    label, _, _, _, _, mapped, accounted = total.rendered()
    out.write('  instances:   {}\n'.format(total.total))
    out.write('  mapped:      {} ({})\n'.format(total.mapped, mapped))
    out.write('  excluded:    {}\n'.format(total.excluded))
    out.write('  unaccounted: {}\n'.format(total.unaccounted))
    out.write('  accounted:   {}\n'.format(accounted))
    for row in report.by_level:
        if row.total:
            out.write('  {}: {}/{} mapped\n'.format(row.label, row.mapped,
                                                   row.total))


def cmd_coverage(args, out):
    report = _unifier(args).coverage.report(args.approach, level=args.level)
    if args.format == 'text':
        _coverage_text(report, out)
        return EXIT_OK
    _emit(out, *COVERAGE_COLUMNS)
    for group, rows in (('level', report.by_level), ('kind', report.by_kind),
                        ('total', (report.total,))):
        for row in rows:
            _emit(out, group, *row.rendered())
    return EXIT_OK


def cmd_appraise(args, out):
    report = _unifier(args).coverage.appraise(args.approach, args.fail_level)
    _emit(out, 'qa_id', 'conformance', 'status', 'evidence')
    for row in report.rows:
        _emit(out, row.qa_id, row.conformance.value, row.status,
              '; '.join(row.targets))
    _emit(out, 'verdict', report.verdict)
    if not report.passed:
        log.error('appraisal of %s fails at level %s', args.approach,
                  report.fail_level.value)
        return EXIT_FINDINGS
    return EXIT_OK


def cmd_census(args, out):
    pbu = _unifier(args)
    if args.process:
        census = pbu.processes.census(args.process)
        for kind, count in census.counts.items():
            _emit(out, kind, count)
        _emit(out, 'criteria items', census.criteria_items)
    else:
        census = pbu.coverage.census(args.approach)
        for kind, count in census.counts.items():
            _emit(out, kind, count)
    _emit(out, 'total', census.total)
    return EXIT_OK


###############################################################################
# versions
###############################################################################
def _new_version(args):
    pbu = _unifier(args)
    new_ws = load_workspace(args.new_workspace)
    new_id = getattr(args, 'new_approach', None) or args.approach
    snapshot = new_ws.approach(new_id)
    if snapshot is None:
        raise CliError('approach {} is not in {}'.format(new_id,
                                                         args.new_workspace))
    return pbu, snapshot


def cmd_diff(args, out):
    pbu, snapshot = _new_version(args)
    diff = pbu.versions.diff(args.approach, snapshot)
    for qa_id in diff.added:
        _emit(out, 'added', qa_id, '')
    for qa_id in diff.removed:
        _emit(out, 'removed', qa_id, '')
    for qa_id, fields in diff.modified:
        _emit(out, 'modified', qa_id, ','.join(fields))
    return EXIT_OK


def cmd_stale(args, out):
    pbu, snapshot = _new_version(args)
    report = pbu.versions.stale(args.process,
                                pbu.versions.diff(args.approach, snapshot))
    for mapping_id, qa_id in report.broken:
        _emit(out, 'broken', mapping_id, qa_id)
    for mapping_id, qa_id in report.review:
        _emit(out, 'review', mapping_id, qa_id)
    return EXIT_FINDINGS if report.broken else EXIT_OK


def cmd_adopt(args, out):
    pbu, snapshot = _new_version(args)
    if snapshot.id != args.approach:
        raise CliError('adopt needs the same approach id in both workspaces')
    diff = pbu.versions.adopt(args.approach, snapshot)
    _emit(out, 'adopted', args.approach, len(diff.added), len(diff.removed),
          len(diff.modified))
    return EXIT_OK


def cmd_rebind(args, out):
    mapping = _unifier(args).versions.rebind(args.process, args.mapping,
                                             args.old, args.new)
    _emit(out, mapping.id, '; '.join(sorted(mapping.qa_ids)))
    return EXIT_OK


###############################################################################
# process refinement and export
###############################################################################
def _child(value):
    kind, sep, name = value.partition(':')
    if sep and kind in ('activity', 'gateway'):
        return (kind, name)
    return ('activity', value)


def _indexes(value):
    try:
        return {int(v) for v in value.split(',') if v.strip()}
    except ValueError:
        raise argparse.ArgumentTypeError(
            'expected comma separated item indexes, got {!r}'.format(value))


def _assignment(value):
    key, sep, side = value.rpartition('=')
    relation, colon, node_id = key.partition(':')
    if not sep or not colon or side not in ('1', '2'):
        raise argparse.ArgumentTypeError(
            'expected RELATION:NODE=1|2, got {!r}'.format(value))
    return (relation, node_id), int(side)


def cmd_decompose(args, out):
    for child_id in _unifier(args).processes.decompose_activity(
            args.process, args.activity, [_child(c) for c in args.child]):
        _emit(out, child_id)
    return EXIT_OK


def _split_args(args):
    return ((args.keep, args.move), args.name, dict(args.assign or ()))


def cmd_split_role(args, out):
    partition, name, reassignment = _split_args(args)
    _emit(out, _unifier(args).processes.split_role(
        args.process, args.role, partition, name, reassignment))
    return EXIT_OK


def cmd_split_data(args, out):
    partition, name, reassignment = _split_args(args)
    _emit(out, _unifier(args).processes.split_data_object(
        args.process, args.data_object, partition, name, reassignment))
    return EXIT_OK


def cmd_export(args, out):
    pbu = _unifier(args)
    if args.xml:
        out.write(pbu.processes.export_xml(args.process))
    elif args.dot:
        process = pbu.workspace.process(args.process)
        if process is None:
            raise CliError('process {} does not exist'.format(args.process))
        graph = (flow_graph(process) if args.graph == 'flow'
                 else containment_graph(process))
        out.write(graph.render())
    else:
        out.write(pbu.processes.export_textual(args.process))
    return EXIT_OK


###############################################################################
# document analysis
###############################################################################
def cmd_xref(args, out):
    docs = CorpusReader(args.corpus).documents()
    exclusions = read_lines(args.exclude) if args.exclude else ()
    areas = read_area_names(args.areas)
    edges = extract_cross_references(docs, areas, exclusions)
    if not (args.matrix or args.rankings or args.dot
            or args.coupling is not None):
        _emit(out, 'from_area', 'to_area', 'count')
        for edge in edges:
            _emit(out, edge.from_area, edge.to_area, edge.count)
        return EXIT_OK
    # Named areas are counted under the id of their document.
    matrix = reference_matrix(edges, {entry[1]: entry[0] for entry in areas
                                      if isinstance(entry, tuple) and entry[0]})
    if args.matrix:
        _emit(out, 'from_area', *matrix.areas)
        for src in matrix.areas:
            _emit(out, src, *(matrix[(src, dst)] for dst in matrix.areas))
    if args.rankings:
        _emit(out, 'direction', 'area', 'count')
        for direction, rows in (('in', matrix.in_rankings),
                                ('out', matrix.out_rankings)):
            for area, count in rows:
                _emit(out, direction, area, count)
    if args.coupling is not None:
        stats = coupling_stats(matrix, args.coupling)
        _emit(out, 'area_a', 'area_b', 'a_to_b', 'b_to_a')
        for pair in stats.pairs:
            _emit(out, *pair)
        _emit(out, 'fraction_over_{}'.format(stats.k), stats.rendered())
    if args.dot:
        out.write(export_dot(matrix))
    return EXIT_OK


def cmd_wordfreq(args, out):
    config = MiningConfig(
        frozenset(read_lines(args.stopwords)) if args.stopwords
        else frozenset(), args.min_length, args.stemmer)
    table = tokenize_and_count(CorpusReader(args.corpus).text(), config)
    if args.top is not None:
        table = table.top(args.top)
    _emit(out, 'token', 'count')
    for token, count in table:
        _emit(out, token, count)
    return EXIT_OK


###############################################################################
# argument parsing
###############################################################################
def _positive(value):
    try:
        number = int(value)
    except ValueError:
        number = -1
    if number < 0:
        raise argparse.ArgumentTypeError(
            'expected a non-negative integer, got {!r}'.format(value))
    return number


def build_parser():
    '''
    Builds the argument parser of the ``pbu`` command.
    '''
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--workspace', metavar='DIR',
        help='workspace directory (default: $PBU_WORKSPACE)')
    common.add_argument('--actor',
        help='name recorded on decisions (default: $PBU_ACTOR or pbu)')
    common.add_argument('-v', '--verbose', action='store_true',
        help='log debug diagnostics to standard error')

    parser = argparse.ArgumentParser(prog='pbu',
        description='Process based unification of quality approaches.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    def command(name, func, help_text):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.set_defaults(func=func)
        return cmd

    cmd = command('init', cmd_init, 'create a workspace')
    cmd.add_argument('--fixture', choices=sorted(FIXTURES))

    cmd = command('log-decision', cmd_log_decision,
                  'append a decision to the ledger')
    cmd.add_argument('--context', required=True)
    cmd.add_argument('--decision', required=True)
    cmd.add_argument('--rationale', required=True)

    cmd = command('staging', cmd_staging,
                  'create the staging process of an approach')
    cmd.add_argument('--approach', required=True)

    cmd = command('import-xml', cmd_import_xml,
                  'import a process from neutral XML')
    cmd.add_argument('--file', required=True)
    cmd.add_argument('--replace', action='store_true',
                     help='replace a process with the same id')

    cmd = command('map', cmd_map, 'add a mapping')
    cmd.add_argument('--process', required=True)
    cmd.add_argument('--qa', action='append', required=True,
                     help='element instance id (repeatable)')
    cmd.add_argument('--node', action='append', required=True,
                     help='process node id (repeatable)')
    cmd.add_argument('--primary')
    cmd.add_argument('--note', default='')

    cmd = command('mappings', cmd_mappings, 'list the mappings of a process')
    cmd.add_argument('--process', required=True)
    cmd.add_argument('--approach',
                     help='show the view restricted to one approach')

    cmd = command('remove-mapping', cmd_remove_mapping, 'remove a mapping')
    cmd.add_argument('--process', required=True)
    cmd.add_argument('--mapping', required=True)
    cmd.add_argument('--rationale', default='mapping withdrawn')

    cmd = command('exclude', cmd_exclude,
                  'exclude an instance from the unified process')
    cmd.add_argument('--qa-id', required=True)
    cmd.add_argument('--rationale', required=True)

    cmd = command('verify', cmd_verify,
                  'verify the mappings and structure of a process')
    cmd.add_argument('--process', required=True)

    cmd = command('trace', cmd_trace, 'follow an instance or a node')
    cmd.add_argument('--process')
    direction = cmd.add_mutually_exclusive_group(required=True)
    direction.add_argument('--from-source', metavar='QA_ID')
    direction.add_argument('--from-node', metavar='NODE_ID')

    cmd = command('coverage', cmd_coverage, 'coverage of an approach')
    cmd.add_argument('--approach', required=True)
    cmd.add_argument('--level')
    cmd.add_argument('--format', choices=('tsv', 'text'), default='tsv')

    cmd = command('appraise', cmd_appraise, 'appraise an approach')
    cmd.add_argument('--approach', required=True)
    cmd.add_argument('--fail-level', required=True)

    cmd = command('census', cmd_census, 'count instances or nodes per kind')
    target = cmd.add_mutually_exclusive_group(required=True)
    target.add_argument('--approach')
    target.add_argument('--process')

    for name, func, help_text in (
            ('diff', cmd_diff, 'compare an approach with a new version'),
            ('stale', cmd_stale, 'mappings touched by a new version'),
            ('adopt', cmd_adopt, 'replace an approach by a new version')):
        cmd = command(name, func, help_text)
        cmd.add_argument('--approach', required=True)
        cmd.add_argument('--new-workspace', required=True, metavar='DIR',
                         help='workspace holding the new version')
        if name != 'adopt':
            cmd.add_argument('--new-approach',
                             help='id of the new version (default: same id)')
        if name == 'stale':
            cmd.add_argument('--process', required=True)

    cmd = command('rebind', cmd_rebind, 'replace an instance in a mapping')
    cmd.add_argument('--process', required=True)
    cmd.add_argument('--mapping', required=True)
    cmd.add_argument('--old', required=True)
    cmd.add_argument('--new', required=True)

    cmd = command('decompose', cmd_decompose,
                  'refine an activity into a subprocess')
    cmd.add_argument('--process', required=True)
    cmd.add_argument('--activity', required=True)
    cmd.add_argument('--child', action='append', required=True,
                     help='[activity:|gateway:]NAME, in flow order')

    for name, func, subject in (('split-role', cmd_split_role, 'role'),
                                ('split-data', cmd_split_data,
                                 'data-object')):
        cmd = command(name, func, 'split a {}'.format(subject))
        cmd.add_argument('--process', required=True)
        cmd.add_argument('--{}'.format(subject), required=True)
        cmd.add_argument('--keep', type=_indexes, required=True,
                         help='item indexes kept by the original')
        cmd.add_argument('--move', type=_indexes, required=True,
                         help='item indexes moved to the new node')
        cmd.add_argument('--name', required=True)
        cmd.add_argument('--assign', type=_assignment, action='append',
                         help='RELATION:NODE=1|2 (repeatable)')

    cmd = command('export', cmd_export, 'export a process')
    cmd.add_argument('--process', required=True)
    fmt = cmd.add_mutually_exclusive_group(required=True)
    fmt.add_argument('--textual', action='store_true')
    fmt.add_argument('--xml', action='store_true')
    fmt.add_argument('--dot', action='store_true')
    cmd.add_argument('--graph', choices=('containment', 'flow'),
                     default='containment')

    cmd = command('xref', cmd_xref, 'mine cross-references from a corpus')
    cmd.add_argument('--corpus', required=True, metavar='DIR')
    cmd.add_argument('--areas', required=True, metavar='FILE')
    cmd.add_argument('--exclude', metavar='FILE',
                     help='phrases whose sentences are skipped')
    cmd.add_argument('--matrix', action='store_true')
    cmd.add_argument('--rankings', action='store_true')
    cmd.add_argument('--coupling', type=_positive, metavar='K')
    cmd.add_argument('--dot', action='store_true')

    cmd = command('wordfreq', cmd_wordfreq, 'count the words of a corpus')
    cmd.add_argument('--corpus', required=True, metavar='DIR')
    cmd.add_argument('--stopwords', metavar='FILE')
    cmd.add_argument('--min-length', type=int, default=1)
    cmd.add_argument('--stemmer', choices=('none', 'porter'), default='none')
    cmd.add_argument('--top', type=_positive, metavar='N')
    return parser


def run(argv=None, out=None):
    '''
    Runs the ``pbu`` command.

    Args:
        argv (list, optional): The arguments, without the program name.
        out (file, optional): Where results are written.  Defaults to
            standard output.

    Returns:
        :obj:`int`: The exit status.
    '''
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_ERROR
    logging.basicConfig(stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.func(args, out)
    except PBUException:
        # already logged when raised
        return EXIT_ERROR
    except (CliError, TypeError, ValueError) as err:
        log.error(str(err))
        return EXIT_ERROR


def main():
    sys.exit(run())
