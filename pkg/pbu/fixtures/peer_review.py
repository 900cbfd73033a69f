'''
peer_review
===========

The peer-review case study: CMMI-DEV VER SG2 (peer reviews), the IEEE 1028
inspection procedure and the Process Impact inspection process, decomposed
into element instances and unified into one peer-review process.  The texts
of the standards are reduced to short titles.

The fixture is deterministic: identifiers, mapping ids and decision
timestamps are fixed, so two builds produce equal values.

.. autofunction:: build_peer_review
'''
from ..model import (
    ApproachRecord, ConformanceLevel, Decision, ElementKind, Exclusion,
    Mapping, ProcessEdge, ProcessModel, ProcessNode, QAInstance, QARelation,
    QualityApproach, Workspace)

PROCESS_ID = 'peer-review'
ACTOR = 'unifier'

M = ConformanceLevel.MANDATORY
R = ConformanceLevel.RECOMMENDATION
O = ConformanceLevel.OPTIONAL
U = ConformanceLevel.UNSPECIFIED


def _record(aid, name, version, attributes, kinds, instances, relations=()):
    return ApproachRecord(
        QualityApproach(aid, name, version, attributes),
        tuple(ElementKind(aid, kind, target) for kind, target in kinds),
        tuple(QAInstance(qa_id, aid, kind, level, text, parent, order)
              for qa_id, kind, level, text, parent, order in instances),
        tuple(QARelation(*r) for r in relations))


###############################################################################
# CMMI-DEV, VER SG2
###############################################################################
_CMMI_SUBPRACTICES = {
    'VER SP2.1': (
        'Determine the type of peer review to be conducted',
        'Define requirements for collecting data during the peer review',
        'Establish and maintain entry and exit criteria for the peer review',
        'Establish and maintain criteria for requiring another peer review',
        'Establish and maintain checklists to review work products '
        'consistently',
        'Develop a detailed peer review schedule, including training dates',
        'Ensure that the work product satisfies the entry criteria before '
        'distribution',
        'Distribute the work product and related information to participants '
        'early enough to prepare',
        'Assign roles for the peer review as appropriate',
        'Prepare for the peer review by reviewing the work product',
    ),
    'VER SP2.2': (
        'Perform the assigned roles in the peer review',
        'Identify and document defects and other issues in the work product',
        'Record results of the peer review, including action items',
        'Collect peer review data',
        'Identify action items and communicate issues to stakeholders',
        'Conduct an additional peer review if needed',
        'Ensure that the exit criteria for the peer review are satisfied',
    ),
    'VER SP2.3': (
        'Record data related to the preparation, conduct and results of the '
        'peer reviews',
        'Store the data for future reference and analysis',
        'Protect the data so that it is not used inappropriately',
        'Analyze the peer review data',
    ),
}

_CMMI_WORK_PRODUCTS = {
    'VER SP2.1': ('Peer review schedule', 'Peer review checklist',
                  'Entry and exit criteria for work products',
                  'Criteria for requiring another peer review',
                  'Peer review training material',
                  'Selected work products to be reviewed'),
    'VER SP2.2': ('Peer review results', 'Peer review issues',
                  'Peer review data'),
    'VER SP2.3': ('Peer review data', 'Peer review action items'),
}


def _cmmi():
    instances = [
        ('VER SG2', 'specific goal', M, 'Perform Peer Reviews', None, 2),
        ('VER SP2.1', 'specific practice', R, 'Prepare for Peer Reviews',
         'VER SG2', 1),
        ('VER SP2.2', 'specific practice', R, 'Conduct Peer Reviews',
         'VER SG2', 2),
        ('VER SP2.3', 'specific practice', R, 'Analyze Peer Review Data',
         'VER SG2', 3),
        ('VER GP 2.4', 'generic practice', R, 'Assign Responsibility',
         None, None),
        ('VER GP 2.7', 'generic practice', R,
         'Identify and Involve Relevant Stakeholders', None, None),
    ]
    for practice, texts in _CMMI_SUBPRACTICES.items():
        for idx, text in enumerate(texts, 1):
            instances.append(('{} SUBP{}'.format(practice, idx), 'subpractice',
                              O, text, practice, idx))
    for practice, texts in _CMMI_WORK_PRODUCTS.items():
        for idx, text in enumerate(texts, 1):
            instances.append(('VER SP {} TWP{}'.format(practice[6:], idx),
                              'typical work product', O, text, practice, idx))
    for role, text in (('leader', 'Peer review leader'),
                       ('reader', 'Reader'), ('recorder', 'Recorder'),
                       ('author', 'Author')):
        instances.append(('VER Role {}'.format(role), 'role', U, text,
                          None, None))
    return _record('cmmi-dev', 'CMMI for Development', '1.3',
        (('origin', 'Software Engineering Institute'),
         ('assessment approach', 'SCAMPI')),
        (('generic practice', 'activity'), ('role', 'role'),
         ('specific goal', 'process'), ('specific practice', 'subprocess'),
         ('subpractice', 'activity'),
         ('typical work product', 'data-object')),
        instances,
        (('VER SP2.1 SUBP7', 'VER SP 2.1 TWP3', 'requires'),
         ('VER SP2.2 SUBP7', 'VER SP 2.1 TWP3', 'requires')))


###############################################################################
# IEEE 1028, inspections
###############################################################################
_IEEE_ROLES = (
    ('inspection leader', 'Plans and leads the inspection'),
    ('recorder', 'Documents anomalies, action items and decisions'),
    ('reader', 'Leads the team through the product'),
    ('author', 'Prepares the product and performs rework'),
    ('inspector', 'Identifies and describes anomalies'),
)

_IEEE_INPUTS = (
    ('should a', R, 'Statement of objectives for the inspection'),
    ('should b', R, 'The software product to be inspected'),
    ('should c', R, 'Documented inspection procedure'),
    ('should d', R, 'Inspection reporting forms'),
    ('should e', R, 'Current anomalies or issues list'),
    ('should f', R, 'Source documents for the product'),
    ('should g', R, 'Inspection checklists'),
    ('may h', O, 'Inspection reinspection criteria'),
    ('may i', O, 'Predecessor software product'),
    ('may j', O, 'Regulations, standards and guidelines'),
    ('may k', O, 'Software product specification'),
    ('may l', O, 'Performance data'),
    ('may m', O, 'Anomaly categories'),
)

_IEEE_OUTPUTS = (
    ('shall a', M, 'Project being inspected'),
    ('shall b', M, 'Inspection team members'),
    ('shall c', M, 'Inspection meeting duration'),
    ('shall d', M, 'Software product inspected'),
    ('shall e', M, 'Size of the materials inspected'),
    ('shall f', M, 'Specific inputs to the inspection'),
    ('shall g', M, 'Inspection objectives and whether they were met'),
    ('shall h', M, 'Anomaly list'),
    ('shall i', M, 'Inspection disposition'),
    ('shall j', M, 'Any waivers granted'),
    ('shall k', M, 'Individual and total preparation time'),
    ('shall l', M, 'Total rework time'),
    ('should m', R, 'Anomaly summary by category and class'),
    ('should n', R, 'Estimate of rework effort and date'),
    ('may o', O, 'Estimated savings from the inspection'),
)

_IEEE_SUBPROCESSES = (
    ('6.5.1', 'Management preparation'),
    ('6.5.2', 'Planning the inspection'),
    ('6.5.3', 'Overview of inspection procedures'),
    ('6.5.4', 'Overview of inspection product'),
    ('6.5.5', 'Preparation'),
    ('6.5.6', 'Examination'),
    ('6.5.7', 'Rework and follow-up'),
    ('6.8', 'Data collection'),
    ('6.9', 'Improvement'),
)

_IEEE_ACTIVITIES = (
    ('6.5.1', '6.5.1', M, 'Managers shall ensure the inspection is performed '
     'as required'),
    ('6.5.1 a', '6.5.1', M, 'Plan time and resources for inspections'),
    ('6.5.1 b', '6.5.1', M, 'Provide funding and facilities'),
    ('6.5.1 c', '6.5.1', M, 'Provide training and orientation'),
    ('6.5.1 d', '6.5.1', M, 'Ensure team members have the needed expertise'),
    ('6.5.1 e', '6.5.1', M, 'Ensure that planned inspections are conducted'),
    ('6.5.1 f', '6.5.1', M, 'Act on inspection team recommendations'),
    ('6.5.2 1', '6.5.2', M, 'The author shall assemble the inspection '
     'materials'),
    ('6.5.2 a', '6.5.2', M, 'Identify the inspection team'),
    ('6.5.2 b', '6.5.2', M, 'Assign specific responsibilities'),
    ('6.5.2 c', '6.5.2', M, 'Schedule the meeting and select the place'),
    ('6.5.2 d', '6.5.2', M, 'Distribute inspection materials'),
    ('6.5.2 e', '6.5.2', M, 'Set a timetable for distributing materials'),
    ('6.5.2 f', '6.5.2', M, 'Specify the scope of the inspection'),
    ('6.5.2 g', '6.5.2', M, 'Establish the anticipated inspection rate'),
    ('6.5.2 2', '6.5.2', O, 'Additional reference material may be made '
     'available by the individuals responsible for the software product when '
     'requested by the inspection leader'),
    ('6.5.3 1', '6.5.3', M, 'Roles shall be assigned by the inspection '
     'leader'),
    ('6.5.3 2', '6.5.3', M, 'The inspection leader shall answer questions '
     'about checklists and present inspection data'),
    ('6.5.4', '6.5.4', M, 'The author shall present an overview of the '
     'product'),
    ('6.5.5 1', '6.5.5', M, 'Each inspector shall examine the product and '
     'other inputs before the meeting'),
    ('6.5.5 2', '6.5.5', M, 'Anomalies detected during examination shall be '
     'documented'),
    ('6.5.5 3', '6.5.5', R, 'The inspection leader should classify anomalies '
     'and cancel the meeting when they are severe'),
    ('6.5.5 4', '6.5.5', M, 'The inspection leader shall specify the order '
     'of inspection'),
    ('6.5.5 5', '6.5.5', M, 'The reader shall be prepared to present the '
     'product'),
    ('6.5.5 6', '6.5.5', M, 'The inspection leader shall gather preparation '
     'times and reschedule when unprepared'),
    ('6.5.6.1', '6.5.6', M, 'Introduce the meeting'),
    ('6.5.6.2', '6.5.6', M, 'Review general items'),
    ('6.5.6.3', '6.5.6', M, 'Review the software product and record '
     'anomalies'),
    ('6.5.6.4', '6.5.6', M, 'Review the anomaly list'),
    ('6.5.6.5', '6.5.6', M, 'Make the exit decision'),
    ('6.5.7', '6.5.7', M, 'Verify that the action items are closed'),
    ('6.8', '6.8', M, 'Collect inspection data'),
    ('6.9', '6.9', M, 'Analyze inspection data to improve the inspection'),
)


def _ieee():
    instances = [('IEEE 1028 Intro', 'introduction', U,
                  'Introduction to inspections', None, None)]
    for role, text in _IEEE_ROLES:
        role_id = 'IEEE 1028 Role {}'.format(role)
        instances.append((role_id, 'role', M, role.capitalize(), None, None))
        instances.append(('IEEE 1028 Resp {}'.format(role), 'responsibility',
                          M, text, role_id, None))
    for suffix, level, text in _IEEE_INPUTS:
        instances.append(('IEEE 1028 In {}'.format(suffix), 'input', level,
                          text, None, None))
    for suffix, level, text in _IEEE_OUTPUTS:
        instances.append(('IEEE 1028 Out {}'.format(suffix), 'output', level,
                          text, None, None))
    instances.append(('IEEE 1028 Entry', 'entry criteria list', M,
                      'Entry criteria for an inspection', None, None))
    instances.append(('IEEE 1028 Exit', 'exit criteria list', M,
                      'Exit criteria for an inspection', None, None))
    for order, (clause, text) in enumerate(_IEEE_SUBPROCESSES, 1):
        instances.append(('IEEE 1028-2008 {}'.format(clause), 'subprocess', M,
                          text, None, order))
    for clause, parent, level, text in _IEEE_ACTIVITIES:
        instances.append(('IEEE1028-2008 {}'.format(clause), 'activity', level,
                          text, 'IEEE 1028-2008 {}'.format(parent), None))
    return _record('ieee-1028', 'IEEE Standard for Software Reviews and '
        'Audits', '2008',
        (('origin', 'IEEE'), ('assessment approach', 'none')),
        (('activity', 'activity'), ('entry criteria list', 'criteria'),
         ('exit criteria list', 'criteria'), ('input', 'data-object'),
         ('introduction', 'process'), ('output', 'data-object'),
         ('responsibility', 'role'), ('role', 'role'),
         ('subprocess', 'subprocess')),
        instances,
        (('IEEE1028-2008 6.5.6.5', 'IEEE 1028 Exit', 'refers-to'),))


###############################################################################
# Process Impact, inspection process
###############################################################################
_PI_ROLES = (
    ('author', 'Creates or maintains the work product being inspected'),
    ('moderator', 'Plans and leads the inspection'),
    ('reader', 'Paraphrases the work product during the meeting'),
    ('recorder', 'Records issues raised during the meeting'),
    ('inspector', 'Finds errors, omissions and inconsistencies'),
    ('verifier', 'Verifies that rework was done correctly'),
    ('peer review coordinator', 'Maintains the inspection data and records'),
)

_PI_PHASES = ('Planning', 'Overview', 'Preparation', 'Inspection Meeting',
              'Rework', 'Follow-Up')

# phase, task, title, responsible role
_PI_TASKS = (
    (1, 1, 'Give the moderator the work product', 'Author'),
    (1, 2, 'Determine whether the work product satisfies the entry criteria',
     'Moderator'),
    (1, 3, 'Determine how many meetings are needed', 'Moderator'),
    (1, 4, 'Select inspectors and assign roles', 'Moderator'),
    (1, 5, 'Determine whether an overview meeting is required', 'Moderator'),
    (1, 6, 'Schedule the inspection', 'Moderator'),
    (1, 7, 'Distribute the inspection package', 'Moderator'),
    (2, 1, 'Describe the important features of the work product', 'Author'),
    (2, 2, 'Evaluate the assumptions and ask inspectors to prepare',
     'Moderator'),
    (3, 1, 'Examine the work product', 'Inspectors'),
    (3, 2, 'Log minor defects on the Typo List', 'Inspectors'),
    (3, 3, 'Open the meeting', 'Moderator'),
    (4, 1, 'Establish preparedness', 'Moderator'),
    (4, 2, 'Present the work product', 'Reader'),
    (4, 3, 'Raise defects and issues', 'Inspectors'),
    (4, 4, 'Record issues on the Issue Log', 'Recorder'),
    (4, 5, 'Answer questions', 'Author'),
    (4, 6, 'Make the product appraisal', 'Inspectors'),
    (4, 7, 'Record the appraisal', 'Recorder'),
    (4, 8, 'Sign the Inspection Summary Report', 'Inspectors'),
    (4, 9, 'Collect inspection feedback', 'Moderator'),
    (5, 1, 'Correct the defects', 'Author'),
    (5, 2, 'Correct other project documents', 'Author'),
    (5, 3, 'Record uncorrected defects in the defect tracking system',
     'Author'),
    (5, 4, 'Report when rework verification is not needed', 'Author'),
    (5, 5, 'Record the actual rework effort', 'Author'),
    (6, 1, 'Confirm that every issue was addressed', 'Verifier'),
    (6, 2, 'Examine the modified work product', 'Verifier'),
    (6, 3, 'Report the defect counts', 'Verifier'),
    (6, 4, 'Check the exit criteria', 'Moderator'),
    (6, 5, 'Check the work product into the baseline', 'Author'),
    (6, 6, 'Deliver the Inspection Summary Report', 'Moderator'),
)

_PI_WORK_AIDS = ('Inspection Summary Report', 'Issue Log', 'Typo List',
                 "Inspection Moderator's Checklist",
                 'Inspection Lessons Learned Questionnaire',
                 'Defect Checklists')

_PI_DELIVERABLES = ('Inspected work product', 'Inspection Summary Report',
                    'Issue Log', 'Typo List', 'Inspection data')

_PI_DATA_ITEMS = (
    'Number of inspectors', 'Planning effort', 'Overview effort',
    'Preparation effort', 'Meeting duration', 'Rework effort',
    'Follow-up effort', 'Size of the work product', 'Major defects found',
    'Minor defects found', 'Major defects corrected',
    'Minor defects corrected',
)

_PI_METRICS = (
    'Defect density', 'Inspection effort', 'Rework effort per defect',
    'Preparation rate', 'Inspection rate', 'Effort per defect',
    'Percent inspection effort', 'Defect removal efficiency',
    'Average defects per inspection', 'Percent majors',
    'Preparation coverage', 'Net savings',
)


def _pi_task(phase, task):
    return 'pi{}{}'.format(phase, task)


def _process_impact():
    instances = [('PI Overview', 'overview', U, 'Inspection process overview',
                  None, None)]
    for idx, text in enumerate(_PI_WORK_AIDS, 1):
        instances.append(('PI WA{}'.format(idx), 'work aid', U, text,
                          None, None))
    instances.append(('PI Risk', 'risk', U, 'Risk assessment guidance for '
                      'selecting inspection candidates', None, None))
    instances.append(('PI Participants', 'participants', U, 'Guidance on '
                      'the number and choice of participants', None, None))
    for role, text in _PI_ROLES:
        role_id = 'PI Role {}'.format(role)
        instances.append((role_id, 'role', U, role.capitalize(), None, None))
        instances.append(('PI Resp {}'.format(role), 'responsibility', U,
                          text, role_id, None))
    instances.append(('PI ent', 'entry', U, 'Inspection entry criteria',
                      None, None))
    for idx, name in enumerate(_PI_PHASES, 1):
        instances.append(('PI{}'.format(idx), 'phase', U, name, None, idx))
    for phase, task, title, role in _PI_TASKS:
        task_id = _pi_task(phase, task)
        instances.append((task_id, 'task', U, title, 'PI{}'.format(phase),
                          task))
        instances.append(('{} order'.format(task_id), 'task order', U,
                          str(task), task_id, task))
        instances.append(('{} role'.format(task_id), 'task-role', U, role,
                          task_id, None))
    for idx, text in enumerate(_PI_DELIVERABLES, 1):
        instances.append(('PI D{}'.format(idx), 'deliverable', U, text,
                          None, None))
    instances.append(('PI exit', 'exit', U, 'Inspection exit criteria',
                      None, None))
    for idx, text in enumerate(_PI_DATA_ITEMS, 1):
        instances.append(('PI DI{}'.format(idx), 'data item', U, text,
                          None, None))
    for idx, text in enumerate(_PI_METRICS, 1):
        instances.append(('PI M{}'.format(idx), 'metric', U, text,
                          None, None))
    instances += [
        ('PI Measurement', 'measurement', U, 'Inspection measurement',
         None, None),
        ('PI Maintenance', 'maintenance', U, 'Process maintenance',
         None, None),
        ('PI Defect record', 'defect record', U, 'Recording defects',
         None, None),
        ('PI Appraisals', 'appraisals', U, 'Work product appraisals',
         None, None),
    ]
    return _record('process-impact', 'Process Impact Inspection Process',
        '1.0', (('origin', 'Process Impact'),),
        (('appraisals', 'activity'), ('data item', None),
         ('defect record', 'data-object'), ('deliverable', 'data-object'),
         ('entry', 'criteria'), ('exit', 'criteria'), ('maintenance',
         'subprocess'), ('measurement', 'subprocess'), ('metric', None),
         ('overview', 'process'), ('participants', None), ('phase',
         'subprocess'), ('responsibility', 'role'), ('risk', None),
         ('role', 'role'), ('task', 'activity'), ('task order', None),
         ('task-role', None), ('work aid', 'data-object')),
        instances)


###############################################################################
# The unified peer-review process
###############################################################################
_SUBPROCESSES = (
    ('perform-inspection', 'Perform inspection', PROCESS_ID),
    ('other-peer-review', 'Perform other peer review', PROCESS_ID),
    ('management-preparation', 'Management preparation',
     'perform-inspection'),
    ('planning', 'Planning', 'perform-inspection'),
    ('overview-procedures', 'Overview of inspection procedures',
     'perform-inspection'),
    ('overview-product', 'Overview of the work product',
     'perform-inspection'),
    ('preparation', 'Preparation', 'perform-inspection'),
    ('examination', 'Examination', 'perform-inspection'),
    ('rework-follow-up', 'Rework and follow-up', 'perform-inspection'),
    ('data-collection', 'Data collection', 'perform-inspection'),
    ('improvement', 'Improvement', 'perform-inspection'),
    ('rework', 'Rework', 'rework-follow-up'),
    ('verify-action-items', 'Verify action items', 'rework-follow-up'),
)

# scope: ((node id, kind, name), ...)
_FLOW_NODES = {
    PROCESS_ID: (
        ('gw-review-type', 'gateway', 'Type of peer review?'),
        ('decide-further-review', 'activity',
         'Decide whether a further peer review is needed'),
        ('gw-further-review', 'gateway', 'Further peer review?'),
    ),
    'perform-inspection': (
        ('check-entry-criteria', 'activity', 'Check the entry criteria'),
        ('gw-entry-criteria-met', 'gateway', 'Entry criteria met?'),
        ('gw-procedure-overview', 'gateway', 'Procedure overview needed?'),
        ('gw-product-overview', 'gateway', 'Product overview needed?'),
    ),
    'management-preparation': (
        ('ensure-performed-as-required', 'activity',
         'Ensure inspections are performed as required'),
        ('plan-time-resources', 'activity', 'Plan time and resources'),
        ('provide-funding', 'activity', 'Provide funding and facilities'),
        ('provide-training', 'activity', 'Provide training'),
        ('ensure-team-expertise', 'activity', 'Ensure team expertise'),
        ('ensure-inspections-conducted', 'activity',
         'Ensure planned inspections are conducted'),
    ),
    'planning': (
        ('ensure-entry-criteria', 'activity',
         'Ensure the work product meets the entry criteria'),
        ('determine-meeting-count', 'activity',
         'Determine the number of meetings'),
        ('assemble-materials', 'activity', 'Assemble inspection materials'),
        ('identify-team', 'activity', 'Identify the inspection team'),
        ('assign-responsibilities', 'activity', 'Assign responsibilities'),
        ('specify-scope', 'activity', 'Specify the inspection scope'),
        ('set-timetable', 'activity', 'Set the timetable'),
        ('schedule-meeting', 'activity', 'Schedule the meeting'),
        ('distribute-materials', 'activity', 'Distribute the materials'),
    ),
    'overview-procedures': (
        ('assign-roles', 'activity', 'Assign roles'),
        ('answer-checklist-questions', 'activity',
         'Answer questions about checklists'),
        ('present-inspection-data', 'activity', 'Present inspection data'),
    ),
    'overview-product': (
        ('describe-features', 'activity', 'Describe the product features'),
        ('evaluate-context', 'activity', 'Evaluate the product in context'),
    ),
    'preparation': (
        ('ask-inspectors-prepare', 'activity', 'Ask inspectors to prepare'),
        ('examine-product-inputs', 'activity',
         'Examine the product and inputs'),
        ('log-minor-defects', 'activity', 'Log minor defects'),
        ('document-anomalies', 'activity', 'Document anomalies'),
        ('classify-anomalies', 'activity', 'Classify anomalies'),
        ('gw-anomalies-severe', 'gateway', 'Anomalies severe?'),
        ('cancel-inspection', 'activity', 'Cancel the inspection'),
        ('forward-anomalies', 'activity', 'Forward anomalies to the author'),
        ('specify-order', 'activity', 'Specify the inspection order'),
        ('reader-prepare', 'activity', 'Reader prepares the presentation'),
        ('gw-inspectors-prepared', 'gateway', 'Inspectors prepared?'),
        ('gather-preparation-times', 'activity', 'Gather preparation times'),
        ('reschedule-meeting', 'activity', 'Reschedule the meeting'),
    ),
    'examination': (
        ('introduce-meeting', 'activity', 'Introduce the meeting'),
        ('establish-preparedness', 'activity', 'Establish preparedness'),
        ('review-general-items', 'activity', 'Review general items'),
        ('present-product', 'activity', 'Present the product'),
        ('examine-product', 'activity', 'Examine the product'),
        ('answer-questions', 'activity', 'Answer questions'),
        ('enter-anomalies', 'activity', 'Enter anomalies in the issue log'),
        ('review-anomaly-list', 'activity', 'Review the anomaly list'),
        ('record-results', 'activity', 'Record the results'),
        ('make-exit-decision', 'activity', 'Make the exit decision'),
        ('gw-exit-decision', 'gateway', 'Exit decision?'),
        ('sign-summary-report', 'activity', 'Sign the summary report'),
        ('collect-feedback', 'activity', 'Collect feedback'),
    ),
    'rework-follow-up': (),
    'rework': (
        ('correct-defects', 'activity', 'Correct defects'),
        ('correct-other-documents', 'activity', 'Correct other documents'),
        ('record-uncorrected-defects', 'activity',
         'Record uncorrected defects'),
        ('record-rework-effort', 'activity', 'Record the rework effort'),
        ('gw-rework-verification', 'gateway', 'Rework verification needed?'),
        ('report-rework-no-verification', 'activity',
         'Report rework without verification'),
    ),
    'verify-action-items': (
        ('confirm-issues-addressed', 'activity',
         'Confirm that issues were addressed'),
        ('examine-modified-product', 'activity',
         'Examine the modified product'),
        ('report-defect-counts', 'activity', 'Report defect counts'),
        ('gw-action-items-closed', 'gateway', 'Action items closed?'),
        ('check-exit-criteria', 'activity', 'Check the exit criteria'),
        ('check-in-baseline', 'activity', 'Check in to the baseline'),
        ('deliver-summary-report', 'activity', 'Deliver the summary report'),
    ),
    'data-collection': (
        ('collect-inspection-data', 'activity', 'Collect inspection data'),
    ),
    'improvement': (
        ('define-data-requirements', 'activity',
         'Define data collection requirements'),
        ('maintain-entry-exit-criteria', 'activity',
         'Maintain entry and exit criteria'),
        ('maintain-reinspection-criteria', 'activity',
         'Maintain reinspection criteria'),
        ('analyze-inspection-data', 'activity', 'Analyze inspection data'),
        ('analyze-preparation-times', 'activity',
         'Analyze preparation times'),
        ('analyze-waivers', 'activity', 'Analyze waivers'),
        ('include-frequent-anomalies', 'activity',
         'Include frequent anomalies in checklists'),
        ('inspect-checklists', 'activity', 'Inspect the checklists'),
        ('assess-benefits', 'activity', 'Assess the inspection benefits'),
        ('act-on-recommendations', 'activity', 'Act on recommendations'),
    ),
    'other-peer-review': (),
}


def _chain(*ids):
    return [(a, b, None) for a, b in zip(ids, ids[1:])]


# Sequence flows per scope; 'start' and 'end' are the scope's own events.
_FLOWS = {
    PROCESS_ID: [
        ('start', 'gw-review-type', None),
        ('gw-review-type', 'perform-inspection', 'inspection'),
        ('gw-review-type', 'other-peer-review', 'other'),
        ('perform-inspection', 'decide-further-review', None),
        ('other-peer-review', 'decide-further-review', None),
        ('decide-further-review', 'gw-further-review', None),
        ('gw-further-review', 'gw-review-type', 'yes'),
        ('gw-further-review', 'end', 'no'),
    ],
    'perform-inspection': _chain('start', 'management-preparation',
                                 'check-entry-criteria',
                                 'gw-entry-criteria-met') + [
        ('gw-entry-criteria-met', 'planning', 'yes'),
        ('gw-entry-criteria-met', 'end', 'no'),
        ('planning', 'gw-procedure-overview', None),
        ('gw-procedure-overview', 'overview-procedures', 'yes'),
        ('gw-procedure-overview', 'gw-product-overview', 'no'),
        ('overview-procedures', 'gw-product-overview', None),
        ('gw-product-overview', 'overview-product', 'yes'),
        ('gw-product-overview', 'preparation', 'no'),
        ('overview-product', 'preparation', None),
    ] + _chain('preparation', 'examination', 'rework-follow-up',
               'data-collection', 'improvement', 'end'),
    'management-preparation': _chain(
        'start', 'ensure-performed-as-required', 'plan-time-resources',
        'provide-funding', 'provide-training', 'ensure-team-expertise',
        'ensure-inspections-conducted', 'end'),
    'planning': _chain(
        'start', 'ensure-entry-criteria', 'determine-meeting-count',
        'assemble-materials', 'identify-team', 'assign-responsibilities',
        'specify-scope', 'set-timetable', 'schedule-meeting',
        'distribute-materials', 'end'),
    'overview-procedures': _chain(
        'start', 'assign-roles', 'answer-checklist-questions',
        'present-inspection-data', 'end'),
    'overview-product': _chain('start', 'describe-features',
                               'evaluate-context', 'end'),
    'preparation': _chain(
        'start', 'ask-inspectors-prepare', 'examine-product-inputs',
        'log-minor-defects', 'document-anomalies', 'classify-anomalies',
        'gw-anomalies-severe') + [
        ('gw-anomalies-severe', 'cancel-inspection', 'yes'),
        ('cancel-inspection', 'end', None),
        ('gw-anomalies-severe', 'forward-anomalies', 'no'),
    ] + _chain('forward-anomalies', 'specify-order', 'reader-prepare',
               'gw-inspectors-prepared') + [
        ('gw-inspectors-prepared', 'gather-preparation-times', 'yes'),
        ('gather-preparation-times', 'end', None),
        ('gw-inspectors-prepared', 'reschedule-meeting', 'no'),
        ('reschedule-meeting', 'ask-inspectors-prepare', None),
    ],
    'examination': _chain(
        'start', 'introduce-meeting', 'establish-preparedness',
        'review-general-items', 'present-product', 'examine-product',
        'answer-questions', 'enter-anomalies', 'review-anomaly-list',
        'record-results', 'make-exit-decision', 'gw-exit-decision') + [
        ('gw-exit-decision', 'sign-summary-report', 'accepted'),
        ('gw-exit-decision', 'review-anomaly-list', 'not completed'),
    ] + _chain('sign-summary-report', 'collect-feedback', 'end'),
    'rework-follow-up': _chain('start', 'rework', 'verify-action-items',
                               'end'),
    'rework': _chain(
        'start', 'correct-defects', 'correct-other-documents',
        'record-uncorrected-defects', 'record-rework-effort',
        'gw-rework-verification') + [
        ('gw-rework-verification', 'report-rework-no-verification',
         'not needed'),
        ('report-rework-no-verification', 'end', None),
        ('gw-rework-verification', 'end', 'needed'),
    ],
    'verify-action-items': _chain(
        'start', 'confirm-issues-addressed', 'examine-modified-product',
        'report-defect-counts', 'gw-action-items-closed') + [
        ('gw-action-items-closed', 'confirm-issues-addressed', 'no'),
        ('gw-action-items-closed', 'check-exit-criteria', 'yes'),
    ] + _chain('check-exit-criteria', 'check-in-baseline',
               'deliver-summary-report', 'end'),
    'data-collection': _chain('start', 'collect-inspection-data', 'end'),
    'improvement': _chain(
        'start', 'define-data-requirements', 'maintain-entry-exit-criteria',
        'maintain-reinspection-criteria', 'analyze-inspection-data',
        'analyze-preparation-times', 'analyze-waivers',
        'include-frequent-anomalies', 'inspect-checklists',
        'assess-benefits', 'act-on-recommendations', 'end'),
    'other-peer-review': _chain('start', 'end'),
}

# id, name, items, inputs to, outputs from
_DATA_OBJECTS = (
    ('do-summary-report', 'Inspection summary report',
     ('Inspection identification', 'Team members', 'Preparation times',
      'Appraisal'),
     ('deliver-summary-report',), ('record-results',)),
    ('do-issue-log', 'Issue log',
     ('Origin', 'Type', 'Severity', 'Location', 'Description'),
     ('correct-defects', 'confirm-issues-addressed'), ('enter-anomalies',)),
    ('do-typo-list', 'Typo list', (), ('correct-defects',),
     ('log-minor-defects',)),
    ('do-moderator-checklist', "Moderator's checklist", (),
     ('assemble-materials',), ()),
    ('do-lessons-questionnaire', 'Lessons learned questionnaire', (), (),
     ('collect-feedback',)),
    ('do-review-checklist', 'Review checklist', (),
     ('examine-product-inputs',), ('inspect-checklists',)),
    ('do-work-product', 'Work product', (),
     ('examine-product-inputs', 'present-product'), ('correct-defects',)),
    ('do-review-schedule', 'Review schedule', (), (), ('schedule-meeting',)),
    ('do-entry-exit-criteria', 'Entry and exit criteria', (),
     ('check-entry-criteria', 'check-exit-criteria'),
     ('maintain-entry-exit-criteria',)),
    ('do-reinspection-criteria', 'Reinspection criteria', (),
     ('make-exit-decision',), ('maintain-reinspection-criteria',)),
    ('do-training-material', 'Training material', (),
     ('provide-training',), ()),
    ('do-action-items', 'Action items', (), ('confirm-issues-addressed',),
     ('review-anomaly-list',)),
    ('do-inspection-procedure', 'Inspection procedure', (),
     ('overview-procedures',), ()),
    ('do-source-products', 'Source products', (),
     ('examine-product-inputs',), ()),
    ('do-predecessor-product', 'Predecessor product', (),
     ('examine-product-inputs',), ()),
    ('do-regulations', 'Regulations and standards', (),
     ('examine-product-inputs',), ()),
    ('do-product-specification', 'Product specification', (),
     ('describe-features',), ()),
    ('do-performance-data', 'Performance data', (),
     ('analyze-inspection-data',), ()),
    ('do-waivers', 'Waivers', (), ('analyze-waivers',),
     ('make-exit-decision',)),
)

# id, name, responsibilities, performs
_ROLES = (
    ('role-author', 'Author',
     ('Assemble the inspection materials', 'Describe the work product',
      'Answer questions', 'Perform rework'),
     ('assemble-materials', 'describe-features', 'answer-questions',
      'correct-defects', 'correct-other-documents',
      'record-uncorrected-defects', 'record-rework-effort',
      'report-rework-no-verification', 'check-in-baseline')),
    ('role-moderator', 'Moderator',
     ('Plan the inspection', 'Check the entry criteria',
      'Select inspectors and assign roles', 'Schedule the meeting',
      'Distribute the inspection package', 'Lead the meeting',
      'Check the exit criteria', 'Deliver the summary report'),
     ('ensure-entry-criteria', 'determine-meeting-count', 'identify-team',
      'assign-responsibilities', 'schedule-meeting', 'distribute-materials',
      'assign-roles', 'introduce-meeting', 'establish-preparedness',
      'make-exit-decision', 'collect-feedback', 'check-exit-criteria',
      'deliver-summary-report')),
    ('role-reader', 'Reader', ('Present the work product',),
     ('present-product', 'reader-prepare')),
    ('role-recorder', 'Recorder', ('Record issues and results',),
     ('enter-anomalies', 'record-results')),
    ('role-inspector', 'Inspector',
     ('Prepare for the meeting', 'Raise defects'),
     ('examine-product-inputs', 'log-minor-defects', 'document-anomalies',
      'examine-product', 'sign-summary-report')),
    ('role-verifier', 'Verifier', ('Verify the rework',),
     ('confirm-issues-addressed', 'examine-modified-product',
      'report-defect-counts')),
    ('role-coordinator', 'Peer review coordinator',
     ('Maintain inspection records', 'Analyze inspection data'),
     ('collect-inspection-data', 'analyze-inspection-data',
      'analyze-preparation-times', 'include-frequent-anomalies')),
)

_ENTRY_CRITERIA = (
    'The inspection is authorized by management',
    'The preconditions of the inspection are met',
    'The statement of objectives is established',
    'The inspection materials are complete',
    'The author has selected the inspection objectives',
    'The work product has been spell-checked',
    'All open issues from prior inspections are resolved',
    'The inspectors have been trained',
    'The work product conforms to its template',
    'Prior work products in the chain have been inspected',
    'The moderator agrees the product is ready for inspection',
)

_EXIT_CRITERIA = (
    'The inspection objectives have been met',
    "All of the author's inspection objectives are satisfied",
    'All issues raised have been addressed',
    'Any changes made have been verified',
    'Uncorrected defects are logged in the defect tracking system',
    'The inspection summary report is complete',
    'The modified work product is checked in',
    'Inspection data are recorded',
    'The verifier has confirmed the rework',
)


def _unified_process():
    nodes = [ProcessNode(PROCESS_ID, 'process', 'Peer Review Process',
                         'Unified peer review process')]
    edges = []
    for sid, name, parent in _SUBPROCESSES:
        nodes.append(ProcessNode(sid, 'subprocess', name, parent_id=parent))
    for scope, members in _FLOW_NODES.items():
        nodes.append(ProcessNode('{}-start'.format(scope), 'start-event',
                                 'Start', parent_id=scope))
        nodes.append(ProcessNode('{}-end'.format(scope), 'end-event', 'End',
                                 parent_id=scope))
        for node_id, kind, name in members:
            nodes.append(ProcessNode(node_id, kind, name, parent_id=scope))
        for src, dst, guard in _FLOWS[scope]:
            src = '{}-{}'.format(scope, src) if src in ('start', 'end') else src
            dst = '{}-{}'.format(scope, dst) if dst in ('start', 'end') else dst
            edges.append(ProcessEdge(src, dst, 'sequence', guard))
    for node_id, name, items, inputs, outputs in _DATA_OBJECTS:
        nodes.append(ProcessNode(node_id, 'data-object', name,
                                 parent_id=PROCESS_ID, items=items))
        edges += [ProcessEdge(node_id, n, 'input') for n in inputs]
        edges += [ProcessEdge(n, node_id, 'output') for n in outputs]
    for node_id, name, items, performs in _ROLES:
        nodes.append(ProcessNode(node_id, 'role', name, parent_id=PROCESS_ID,
                                 items=items))
        edges += [ProcessEdge(node_id, n, 'performs') for n in performs]
    nodes.append(ProcessNode('entry-criteria', 'criteria-set', 'Entry criteria',
        parent_id='perform-inspection', items=_ENTRY_CRITERIA))
    nodes.append(ProcessNode('exit-criteria', 'criteria-set', 'Exit criteria',
        parent_id='perform-inspection', items=_EXIT_CRITERIA))
    return ProcessModel(PROCESS_ID, tuple(nodes), tuple(edges))


###############################################################################
# Mappings, exclusions and decisions
###############################################################################
def _ieee_in(*suffixes):
    return ['IEEE 1028 In {}'.format(s) for s in suffixes]


def _ieee_out(*suffixes):
    return ['IEEE 1028 Out {}'.format(s) for s in suffixes]


def _ieee_act(clause):
    return 'IEEE1028-2008 {}'.format(clause)


# qa ids, node ids, primary source, note
_MAPPINGS = [
    (['VER SG2', 'PI Overview'], [PROCESS_ID], 'VER SG2', ''),
    (['IEEE 1028 Intro'], ['perform-inspection'], None, ''),
    (['VER SP2.1'], ['planning', 'preparation'], None, ''),
    (['VER SP2.2'], ['examination'], None, ''),
    (['VER SP2.3'], ['data-collection', 'improvement'], None, ''),
    # subprocesses
    (['IEEE 1028-2008 6.5.1'], ['management-preparation'], None, ''),
    (['IEEE 1028-2008 6.5.2', 'PI1'], ['planning'], 'IEEE 1028-2008 6.5.2',
     ''),
    (['IEEE 1028-2008 6.5.3'], ['overview-procedures'], None, ''),
    (['IEEE 1028-2008 6.5.4', 'PI2'], ['overview-product'],
     'IEEE 1028-2008 6.5.4', ''),
    (['IEEE 1028-2008 6.5.5', 'PI3', 'VER SP2.1 SUBP10'], ['preparation'],
     'IEEE 1028-2008 6.5.5', ''),
    (['IEEE 1028-2008 6.5.6', 'PI4', 'VER SP2.2 SUBP1'], ['examination'],
     'IEEE 1028-2008 6.5.6', 'the inspection meeting of Process Impact'),
    (['IEEE 1028-2008 6.5.7'], ['rework-follow-up'], None, ''),
    (['PI5'], ['rework'], None, ''),
    (['PI6'], ['verify-action-items'], None, ''),
    (['IEEE 1028-2008 6.8', 'PI Measurement'], ['data-collection'],
     'IEEE 1028-2008 6.8', ''),
    (['IEEE 1028-2008 6.9', 'PI Maintenance'], ['improvement'],
     'IEEE 1028-2008 6.9', ''),
    # IEEE activities
    ([_ieee_act('6.5.1')], ['ensure-performed-as-required'], None, ''),
    ([_ieee_act('6.5.1 a')], ['plan-time-resources'], None, ''),
    ([_ieee_act('6.5.1 b')], ['provide-funding'], None, ''),
    ([_ieee_act('6.5.1 c')], ['provide-training'], None, ''),
    ([_ieee_act('6.5.1 d')], ['ensure-team-expertise'], None, ''),
    ([_ieee_act('6.5.1 e')], ['ensure-inspections-conducted'], None, ''),
    ([_ieee_act('6.5.1 f')], ['act-on-recommendations'], None, ''),
    ([_ieee_act('6.5.2 1')], ['assemble-materials'], None, ''),
    ([_ieee_act('6.5.2 a')], ['identify-team'], None, ''),
    ([_ieee_act('6.5.2 b')], ['assign-responsibilities'], None, ''),
    ([_ieee_act('6.5.2 c')], ['schedule-meeting'], None, ''),
    ([_ieee_act('6.5.2 d')], ['distribute-materials'], None, ''),
    ([_ieee_act('6.5.2 e')], ['set-timetable'], None, ''),
    ([_ieee_act('6.5.2 f')], ['specify-scope'], None, ''),
    ([_ieee_act('6.5.2 g')], ['set-timetable'], None,
     'includes the anticipated inspection rate'),
    ([_ieee_act('6.5.3 1')], ['assign-roles'], None,
     'roles are assigned by the moderator'),
    ([_ieee_act('6.5.3 2')], ['answer-checklist-questions',
                              'present-inspection-data'], None, ''),
    ([_ieee_act('6.5.4')], ['describe-features'], None, ''),
    ([_ieee_act('6.5.5 1')], ['examine-product-inputs'], None, ''),
    ([_ieee_act('6.5.5 2')], ['document-anomalies'], None, ''),
    ([_ieee_act('6.5.5 3')], ['classify-anomalies', 'gw-anomalies-severe',
                              'cancel-inspection', 'forward-anomalies'],
     None, ''),
    ([_ieee_act('6.5.5 4')], ['specify-order'], None, ''),
    ([_ieee_act('6.5.5 5')], ['reader-prepare'], None, ''),
    ([_ieee_act('6.5.5 6')], ['gw-inspectors-prepared', 'reschedule-meeting',
                              'gather-preparation-times'], None, ''),
    ([_ieee_act('6.5.6.1')], ['introduce-meeting'], None, ''),
    ([_ieee_act('6.5.6.2')], ['review-general-items'], None, ''),
    ([_ieee_act('6.5.6.3')], ['present-product', 'examine-product',
                              'enter-anomalies', 'answer-questions'],
     None, ''),
    ([_ieee_act('6.5.6.4')], ['review-anomaly-list'], None, ''),
    ([_ieee_act('6.5.6.5')], ['make-exit-decision', 'gw-exit-decision'],
     None, ''),
    ([_ieee_act('6.5.7')], ['verify-action-items', 'gw-action-items-closed'],
     None, ''),
    (['VER SP2.2 SUBP4', 'VER SP2.3 SUBP1', 'VER SP2.3 SUBP2',
      'VER SP2.3 SUBP3', _ieee_act('6.8')], ['collect-inspection-data'],
     _ieee_act('6.8'), ''),
    ([_ieee_act('6.9')], ['analyze-inspection-data',
                          'include-frequent-anomalies', 'inspect-checklists',
                          'analyze-waivers', 'analyze-preparation-times',
                          'assess-benefits'], None, ''),
    # CMMI subpractices
    (['VER SP2.1 SUBP1'], ['gw-review-type'], None, ''),
    (['VER SP2.1 SUBP2'], ['define-data-requirements'], None, ''),
    (['VER SP2.1 SUBP3'], ['maintain-entry-exit-criteria'], None, ''),
    (['VER SP2.1 SUBP4'], ['maintain-reinspection-criteria'], None, ''),
    (['VER SP2.1 SUBP5'], ['inspect-checklists'], None, ''),
    (['VER SP2.1 SUBP6'], ['schedule-meeting', 'provide-training'], None, ''),
    (['VER SP2.1 SUBP7'], ['ensure-entry-criteria'], None, ''),
    (['VER SP2.1 SUBP8'], ['distribute-materials'], None, ''),
    (['VER SP2.1 SUBP9'], ['assign-responsibilities'], None, ''),
    (['VER SP2.2 SUBP2'], ['enter-anomalies'], None, ''),
    (['VER SP2.2 SUBP3'], ['record-results'], None, ''),
    (['VER SP2.2 SUBP5'], ['review-anomaly-list'], None, ''),
    (['VER SP2.2 SUBP6'], ['decide-further-review', 'gw-further-review'],
     None, ''),
    (['VER SP2.2 SUBP7'], ['make-exit-decision'], None, ''),
    (['VER SP2.3 SUBP4'], ['analyze-inspection-data'], None, ''),
    (['VER GP 2.4', 'VER GP 2.7'], ['assign-roles',
                                    'assign-responsibilities',
                                    'identify-team'], None, ''),
    # data objects
    (['VER SP 2.2 TWP1', 'VER SP 2.2 TWP3', 'PI WA1', 'PI D2']
     + _ieee_in('should a', 'should d')
     + _ieee_out('shall a', 'shall b', 'shall c', 'shall e', 'shall f',
                 'shall i', 'shall k', 'shall l', 'should n', 'may o'),
     ['do-summary-report'], 'PI WA1', ''),
    (['VER SP 2.2 TWP2', 'VER SP 2.2 TWP3', 'VER SP 2.3 TWP1', 'PI WA2',
      'PI D3', 'PI D5', 'PI Defect record']
     + _ieee_in('should d', 'should e', 'may m')
     + _ieee_out('shall h', 'should m'),
     ['do-issue-log'], 'PI WA2', ''),
    (['VER SP 2.2 TWP3', 'PI WA3', 'PI D4'] + _ieee_in('should d'),
     ['do-typo-list'], 'PI WA3', ''),
    (['PI WA4'], ['do-moderator-checklist'], None, ''),
    (['PI WA5'] + _ieee_out('shall g'), ['do-lessons-questionnaire'],
     'PI WA5', ''),
    (['VER SP 2.1 TWP2', 'PI WA6'] + _ieee_in('should g'),
     ['do-review-checklist'], 'PI WA6', ''),
    (['VER SP 2.1 TWP6', 'PI D1'] + _ieee_in('should b')
     + _ieee_out('shall d'), ['do-work-product'], 'VER SP 2.1 TWP6', ''),
    (['VER SP 2.1 TWP1'], ['do-review-schedule'], None, ''),
    (['VER SP 2.1 TWP3'], ['do-entry-exit-criteria'], None, ''),
    (['VER SP 2.1 TWP4'] + _ieee_in('may h'), ['do-reinspection-criteria'],
     'VER SP 2.1 TWP4', ''),
    (['VER SP 2.1 TWP5'], ['do-training-material'], None, ''),
    (['VER SP 2.3 TWP2'], ['do-action-items'], None, ''),
    (_ieee_in('should c'), ['do-inspection-procedure'], None, ''),
    (_ieee_in('should f'), ['do-source-products'], None, ''),
    (_ieee_in('may i'), ['do-predecessor-product'], None, ''),
    (_ieee_in('may j'), ['do-regulations'], None, ''),
    (_ieee_in('may k'), ['do-product-specification'], None, ''),
    (_ieee_in('may l'), ['do-performance-data'], None, ''),
    (_ieee_out('shall j'), ['do-waivers'], None, ''),
    # criteria
    (['IEEE 1028 Entry', 'PI ent'], ['entry-criteria'], 'IEEE 1028 Entry',
     ''),
    (['IEEE 1028 Exit', 'PI exit'], ['exit-criteria'], 'IEEE 1028 Exit', ''),
    # Process Impact tasks
    (['PI Appraisals'], ['make-exit-decision'], None, ''),
]

_ROLE_SOURCES = {
    'role-author': ['PI Role author', 'PI Resp author',
                    'IEEE 1028 Role author', 'IEEE 1028 Resp author',
                    'VER Role author'],
    'role-moderator': ['PI Role moderator', 'PI Resp moderator',
                       'IEEE 1028 Role inspection leader',
                       'IEEE 1028 Resp inspection leader', 'VER Role leader'],
    'role-reader': ['PI Role reader', 'PI Resp reader',
                    'IEEE 1028 Role reader', 'IEEE 1028 Resp reader',
                    'VER Role reader'],
    'role-recorder': ['PI Role recorder', 'PI Resp recorder',
                      'IEEE 1028 Role recorder', 'IEEE 1028 Resp recorder',
                      'VER Role recorder'],
    'role-inspector': ['PI Role inspector', 'PI Resp inspector',
                       'IEEE 1028 Role inspector', 'IEEE 1028 Resp inspector'],
    'role-verifier': ['PI Role verifier', 'PI Resp verifier'],
    'role-coordinator': ['PI Role peer review coordinator',
                         'PI Resp peer review coordinator'],
}

_TASK_TARGETS = {
    'pi11': ['assemble-materials'],
    'pi12': ['ensure-entry-criteria'],
    'pi13': ['determine-meeting-count'],
    'pi14': ['assign-responsibilities', 'identify-team'],
    'pi15': ['gw-procedure-overview', 'gw-product-overview'],
    'pi16': ['schedule-meeting'],
    'pi17': ['distribute-materials'],
    'pi21': ['describe-features'],
    'pi22': ['evaluate-context', 'ask-inspectors-prepare'],
    'pi31': ['examine-product-inputs'],
    'pi32': ['log-minor-defects'],
    'pi33': ['introduce-meeting'],
    'pi41': ['establish-preparedness'],
    'pi42': ['present-product'],
    'pi43': ['examine-product'],
    'pi44': ['enter-anomalies'],
    'pi45': ['answer-questions'],
    'pi46': ['make-exit-decision'],
    'pi47': ['record-results'],
    'pi48': ['sign-summary-report'],
    'pi49': ['collect-feedback'],
    'pi51': ['correct-defects'],
    'pi52': ['correct-other-documents'],
    'pi53': ['record-uncorrected-defects'],
    'pi54': ['report-rework-no-verification', 'gw-rework-verification'],
    'pi55': ['record-rework-effort'],
    'pi61': ['confirm-issues-addressed'],
    'pi62': ['examine-modified-product'],
    'pi63': ['report-defect-counts'],
    'pi64': ['check-exit-criteria'],
    'pi65': ['check-in-baseline'],
    'pi66': ['deliver-summary-report'],
}

_MEASUREMENT_RATIONALE = ('measurement definitions are kept by the '
                          "organisation's measurement process")


def _mappings():
    specs = list(_MAPPINGS)
    for node_id, sources in sorted(_ROLE_SOURCES.items()):
        specs.append((sources, [node_id], sources[0], ''))
    for task_id, targets in sorted(_TASK_TARGETS.items()):
        specs.append(([task_id, '{} order'.format(task_id),
                       '{} role'.format(task_id)], targets, task_id, ''))
    return tuple(Mapping('m-{:04d}'.format(idx), qa_ids, node_ids, primary,
                         note)
                 for idx, (qa_ids, node_ids, primary, note)
                 in enumerate(specs, 1))


def _exclusions():
    pi = [Exclusion('PI Risk', 'selecting inspection candidates is a '
                    'project planning concern, not part of the inspection'),
          Exclusion('PI Participants', 'covered by the role descriptions of '
                    'the unified process')]
    pi += [Exclusion('PI DI{}'.format(i), _MEASUREMENT_RATIONALE)
           for i in range(1, len(_PI_DATA_ITEMS) + 1)]
    pi += [Exclusion('PI M{}'.format(i), _MEASUREMENT_RATIONALE)
           for i in range(1, len(_PI_METRICS) + 1)]
    return {'process-impact': tuple(pi)}


_DECISIONS = (
    ('2012-03-01T09:00:00Z', 'select/approaches',
     'unify CMMI-DEV VER SG2, IEEE 1028 inspections and the Process Impact '
     'inspection process', 'all three describe peer reviews'),
    ('2012-03-01T10:30:00Z', 'select/representation',
     'model the unified process in the tabular textual representation',
     'the approaches are compared element by element'),
    ('2012-03-05T14:00:00Z', 'map/peer-review',
     "used PI term 'moderator' for the inspection leader role",
     'clearest of the three synonyms'),
    ('2012-03-06T11:15:00Z', 'exclude/process-impact',
     'excluded risk assessment and participant guidance',
     'guidance for tailoring, not process content'),
    ('2012-03-06T11:20:00Z', 'exclude/process-impact',
     'excluded data items and metrics', _MEASUREMENT_RATIONALE),
)


def build_peer_review():
    '''
    Builds the peer-review case study workspace.

    Returns:
        :obj:`pbu.model.Workspace`

    Examples:
        >>> from pbu.workspace import save_workspace
        >>> save_workspace(build_peer_review(), './peer-review')
    '''
    return Workspace(
        approaches=(_cmmi(), _ieee(), _process_impact()),
        processes=(_unified_process(),),
        mappings={PROCESS_ID: _mappings()},
        exclusions=_exclusions(),
        decisions=tuple(Decision(stamp, ACTOR, context, decision, rationale)
                        for stamp, context, decision, rationale
                        in _DECISIONS))
