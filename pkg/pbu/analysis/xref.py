'''
xref
====

Cross-reference mining over the chapters of a quality approach.  Sentences
of the form "Refer to the <area> process area" (or "Refer to the ...
specific practice in the <area> process area") are collected per document,
aggregated into a reference matrix, and summarised as rankings and a
coupling statistic.

.. autoclass:: AreaDocument
.. autoclass:: ReferenceEdge
.. autoclass:: ReferenceMatrix
.. autoclass:: CouplingStats
.. autofunction:: extract_cross_references
.. autofunction:: reference_matrix
.. autofunction:: coupling_stats
'''
from collections import Counter
from dataclasses import dataclass, field
import logging, re
from pbu.errors import UnexpectedValueError
from pbu.utils import ratio, render_ratio

log = logging.getLogger(__name__)

_SENTENCE_END = re.compile(r'(?<=[.!?])(?:\s+|$)')


@dataclass(frozen=True)
class AreaDocument:
    area_id: str
    text: str


@dataclass(frozen=True)
class ReferenceEdge:
    '''
    Attributes:
        from_area (str): The id of the referring document.
        to_area (str): The referenced area, spelled as in the area list.
        count (int): How many sentences carry the reference.
    '''
    from_area: str
    to_area: str
    count: int = 1


def _names(area_names):
    '''
    Splits an area list into canonical names and the names owned by an
    area id.  Entries are plain names or ``(area_id, name)`` pairs.
    '''
    names, owned = [], {}
    for entry in area_names:
        if isinstance(entry, (tuple, list)):
            area_id, name = entry
            if area_id:
                owned.setdefault(area_id, set()).add(name.lower())
        else:
            name = entry
        names.append(name)
    return names, owned


def _pattern(names):
    # Longer names first, so the alternation prefers the longest match.
    alternatives = '|'.join(
        r'\s+'.join(re.escape(part) for part in name.split())
        for name in sorted(set(names), key=lambda n: (-len(n), n)))
    return re.compile(
        r'\brefer\s+to\s+the\s+(?:(?P<area>{0})\s+process\s+area'
        r'|.*?\bspecific\s+practices?\s+in\s+(?:the\s+)?(?P<via>{0})'
        r'\s+process\s+area)'.format(alternatives), re.IGNORECASE)


def sentences(text):
    '''
    Splits text into sentences on ``.``, ``!`` and ``?`` followed by
    whitespace or the end of the text.
    '''
    text = ' '.join(text.split())
    return [s for s in _SENTENCE_END.split(text) if s]


def extract_cross_references(corpus, area_names, exclusion_phrases=()):
    '''
    Finds the references between areas.

    Args:
        corpus (list): :class:`AreaDocument` values.
        area_names (list):
            The referable area names, either as strings or as
            ``(area_id, name)`` pairs.  With pairs, a document referring to
            its own name is a self-reference and is dropped.
        exclusion_phrases (list, optional):
            Sentences containing any of these (case-insensitively) are
            skipped.

    Returns:
        :obj:`list`: :class:`ReferenceEdge` values sorted by area pair.

    Examples:
        >>> doc = AreaDocument('CM', 'Refer to the Project Planning '
        ...                    'process area for more information.')
        >>> extract_cross_references([doc], ['Project Planning'])
        [ReferenceEdge(from_area='CM', to_area='Project Planning', count=1)]
    '''
    names, owned = _names(area_names)
    if not names:
        return []
    canonical = {' '.join(n.lower().split()): n for n in names}
    pattern = _pattern(names)
    phrases = [p.lower() for p in exclusion_phrases if p]
    counts = Counter()
    for doc in corpus:
        own = owned.get(doc.area_id, set()) | {doc.area_id.lower()}
        for sentence in sentences(doc.text):
            lowered = sentence.lower()
            if any(p in lowered for p in phrases):
                continue
            for match in pattern.finditer(sentence):
                found = match.group('area') or match.group('via')
                target = canonical[' '.join(found.lower().split())]
                if target.lower() in own:
                    continue
                counts[(doc.area_id, target)] += 1
    log.debug('extracted {} references over {} area pairs'.format(
        sum(counts.values()), len(counts)))
    return [ReferenceEdge(src, dst, n) for (src, dst), n in sorted(counts.items())]


@dataclass(frozen=True)
class ReferenceMatrix:
    '''
    Reference counts keyed by ``(from_area, to_area)``.

    Attributes:
        counts (dict): The non-zero cells.
        areas (tuple): Every area appearing in a cell, sorted.
    '''
    counts: dict = field(default_factory=dict)

    @property
    def areas(self):
        return tuple(sorted({a for pair in self.counts for a in pair}))

    def __getitem__(self, pair):
        return self.counts.get(pair, 0)

    def _ranking(self, side):
        totals = Counter({a: 0 for a in self.areas})
        for pair, count in self.counts.items():
            totals[pair[side]] += count
        return sorted(totals.items(), key=lambda i: (-i[1], i[0]))

    @property
    def in_rankings(self):
        '''
        ``(area, references to it)`` pairs, most referenced first.
        '''
        return self._ranking(1)

    @property
    def out_rankings(self):
        '''
        ``(area, references from it)`` pairs, most referring first.
        '''
        return self._ranking(0)


def reference_matrix(edges, aliases=None):
    '''
    Aggregates reference edges into a matrix.

    Args:
        edges (list): :class:`ReferenceEdge` values.
        aliases (dict, optional):
            Renames areas before aggregation, e.g. area names to the ids of
            their documents so both ends of a cell use one vocabulary.

    Returns:
        :obj:`ReferenceMatrix`

    Examples:
        >>> matrix = reference_matrix([ReferenceEdge('A', 'B', 2),
        ...                            ReferenceEdge('B', 'A', 1)])
        >>> matrix.in_rankings
        [('B', 2), ('A', 1)]
    '''
    aliases = aliases or {}
    counts = Counter()
    for edge in edges:
        counts[(aliases.get(edge.from_area, edge.from_area),
                aliases.get(edge.to_area, edge.to_area))] += edge.count
    return ReferenceMatrix({pair: n for pair, n in sorted(counts.items()) if n})


@dataclass(frozen=True)
class CouplingStats:
    '''
    Attributes:
        k (int): The threshold.
        pairs (tuple):
            ``(a, b, a_to_b, b_to_a)`` for every unordered area pair with at
            least one reference, ``a < b``.
        fraction_over_k (Fraction):
            The share of those pairs with more than ``k`` references in total.
    '''
    k: int
    pairs: tuple
    fraction_over_k: object

    def rendered(self):
        return render_ratio(self.fraction_over_k, 3)


def coupling_stats(matrix, k):
    '''
    Measures how tightly areas are coupled.

    Args:
        matrix (ReferenceMatrix): The reference counts.
        k (int): Pairs with more than ``k`` references in total count as
            tightly coupled.

    Returns:
        :obj:`CouplingStats`

    Examples:
        >>> coupling_stats(reference_matrix([ReferenceEdge('A', 'B', 9)]),
        ...                6).rendered()
        '1.000'
    '''
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError('k is of type {}.  Expected int.'.format(
            type(k).__name__))
    if k < 0:
        raise UnexpectedValueError('k has value of {}.  Expected k >= 0'.format(k))
    pairs = []
    for a, b in sorted({tuple(sorted(pair)) for pair in matrix.counts}):
        if a == b:
            continue
        forward, backward = matrix[(a, b)], matrix[(b, a)]
        if forward + backward >= 1:
            pairs.append((a, b, forward, backward))
    over = sum(1 for p in pairs if p[2] + p[3] > k)
    return CouplingStats(k, tuple(pairs), ratio(over, len(pairs)))
