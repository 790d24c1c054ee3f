# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Analysis of single graphs and exhaustive surveys over small graphs.

`analyze` runs every decision procedure on one graph and collects the
results in an `AnalysisRecord`. `run_survey` feeds a stream of graphs
through `analyze`, checks the proven implications between the properties
and collects the cases relevant to the open question whether accessibility
and Cohen-Macaulayness coincide.

Proven implications are hard assertions: a failure raises
`TheoremViolation`. Cases that merely bear on open questions, such as an
accessible graph whose ideal is not Cohen-Macaulay, are reported as
findings.

Records can be persisted to a JSON lines file through `RecordSink`; each
line carries a SHA-256 checksum of its record, and a run can be resumed
from such a file without recomputing the graphs already present.
"""
import functools
import hashlib
import io
import json
import logging
import os
import time
from collections import Counter, OrderedDict, deque, namedtuple
from multiprocessing import Pool

from pybei import extra_packages
from pybei.cutsets import enumerate_cut_sets, find_unmixed_cut_vertex
from pybei.cutsets import is_accessible, is_strongly_unmixed
from pybei.cutsets import structural_necessary_conditions
from pybei.graph import Graph, SizeBoundError, canonical_form
from pybei.graph import components_after_removal, components_are_complete
from pybei.graph import glue_at_vertices, is_connected, iter_graph6
from pybei.graph import parse_graph6, to_graph6
from pybei.graph_classes import block_graph_is_tree, decomposition_sides
from pybei.graph_classes import is_bipartite, is_chordal, is_decomposable
from pybei.graph_classes import is_traceable
from pybei.helpers import field_name, fields_from_environment, labels_of
from pybei.helpers import bit, lowest_label, popcount
from pybei.ideal_geometry import INFINITE, hirsch_check
from pybei.poset import build_poset, cm_certificate

logger = logging.getLogger(__name__)

MAX_GENERATED_VERTICES = 8

ASSERT_THEOREMS = 'theorems'
ASSERT_NONE = 'none'

FINDING_ACCESSIBLE_NOT_CM = 'accessible-not-cm'
FINDING_FIELD_DEPENDENT = 'field-dependent'
FINDING_CONVENTION_SENSITIVE = 'convention-sensitive'
FINDING_NECESSARY_NOT_SUFFICIENT = 'necessary-not-sufficient'
FINDING_NO_UNMIXED_CUT_VERTEX = 'no-unmixed-cut-vertex'
FINDING_NOT_STRONGLY_UNMIXED = 'accessible-not-strongly-unmixed'

COMBINATION_FLAGS = ('unmixed', 'accessible', 'strongly_unmixed', 'cm',
                     'chordal', 'traceable', 'bipartite')

GluingOutcome = namedtuple('GluingOutcome',
                           'g_side h_side graph record accessible_preserved '
                           'cm_preserved')
GluingReport = namedtuple('GluingReport', 'g_record h_record outcomes')


class TheoremViolation(Exception):
    """Raised if a record contradicts a proven implication.

    Attributes:
        record: the offending `AnalysisRecord`.
        violations: the violated statements.
    """

    def __init__(self, record, violations):
        super(TheoremViolation, self).__init__(
            'Graph %s violates: %s' % (record.graph6, '; '.join(violations)))
        self.record = record
        self.violations = list(violations)

    def counterexample(self):
        """Return the full counterexample dump as JSON text."""
        return json.dumps({'violations': self.violations,
                           'record': self.record.to_dict()},
                          indent=2, sort_keys=True)


class CheckpointError(Exception):
    """Raised if a JSON lines checkpoint has a corrupt line."""

    def __init__(self, path, lineno, reason):
        super(CheckpointError, self).__init__(
            '%s: line %d: %s' % (path, lineno, reason))
        self.path = path
        self.lineno = lineno


class AnalysisRecord(object):
    """All results of `analyze` for one graph.

    Vertex sets are stored as label lists and field verdicts under the
    field names ('Q', 'GF(2)', ...), so a record maps one to one onto its
    JSON form. A value of None means not computed or not applicable.
    """
    FIELDS = (
        'key', 'graph6', 'n', 'edges', 'edge_list', 'connected',
        'complete_components', 'unmixed', 'accessible', 'strongly_unmixed',
        'cm', 'convention_sensitive', 'chordal', 'traceable', 'bipartite',
        'decomposable', 'hirsch', 'diameter', 'height', 'block_graph_is_tree',
        'cut_vertex_count', 'necessary_conditions', 'good_cut_vertex',
        'cut_sets', 'stuck_cut_set', 'unmixedness_violation', 'cm_failure',
        'bounds_exceeded', 'timings',
    )

    def __init__(self, **values):
        unknown = set(values) - set(self.FIELDS)
        if unknown:
            raise ValueError('Unknown record fields: %s'
                             % ', '.join(sorted(unknown)))
        for name in self.FIELDS:
            setattr(self, name, values.get(name))
        if self.cm is None:
            self.cm = {}
        if self.bounds_exceeded is None:
            self.bounds_exceeded = []
        if self.timings is None:
            self.timings = {}

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    def to_dict(self):
        return OrderedDict((name, getattr(self, name))
                           for name in self.FIELDS)

    def __eq__(self, other):
        if not isinstance(other, AnalysisRecord):
            return NotImplemented
        return all(getattr(self, name) == getattr(other, name)
                   for name in self.FIELDS if name != 'timings')

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __repr__(self):
        return 'AnalysisRecord(%s)' % self.graph6

    @property
    def cm_known(self):
        """The field verdicts that were computed."""
        return dict((name, value) for name, value in self.cm.items()
                    if value is not None)

    @property
    def cm_all(self):
        """True or False when every field agrees, otherwise None."""
        values = set(self.cm.values())
        if len(values) == 1 and None not in values:
            return values.pop()
        return None

    @property
    def cm_false_somewhere(self):
        return False in self.cm.values()

    def combination(self):
        """Return the names of the flags that hold, joined by '+'."""
        flags = dict((name, getattr(self, name)) for name in COMBINATION_FLAGS
                     if name != 'cm')
        flags['cm'] = self.cm_all
        names = [name for name in COMBINATION_FLAGS if flags[name] is True]
        return '+'.join(names) or 'none'


def _elapsed(timings, stage, start):
    timings[stage] = round(time.time() - start, 6)
    return time.time()


def analyze(g, fields=None, geometry=True):
    """Run every procedure on `g` and return an `AnalysisRecord`.

    A poset beyond its size bound leaves the Cohen-Macaulay verdicts at
    None and is noted in `bounds_exceeded`.

    Args:
        g: the graph.
        fields: field characteristics, defaults to ``BEI_FIELDS``.
        geometry: set to False to skip the dual graph and the poset, which
            leaves `hirsch` and `cm` unset.

    Raises:
        SizeBoundError: if `g` is too large for cut-set enumeration.
    """
    if fields is None:
        fields = fields_from_environment()
    timings = {}
    start = time.time()
    family = enumerate_cut_sets(g)
    connected = is_connected(g)
    report = is_accessible(g, family)
    record = AnalysisRecord(
        key=canonical_form(g).decode('ascii'),
        graph6=to_graph6(g),
        n=g.n,
        edges=g.edge_count,
        edge_list=[list(edge) for edge in g.edges()],
        connected=connected,
        complete_components=components_are_complete(g),
        unmixed=report.unmixed,
        accessible=report.accessible,
        cut_sets=family.as_lists(),
        cut_vertex_count=popcount(family.cut_vertices),
        stuck_cut_set=_labels(report.stuck_sets[0]
                              if report.stuck_sets else None),
        unmixedness_violation=_labels(report.unmixedness_violation),
        timings=timings,
    )
    start = _elapsed(timings, 'cutsets', start)
    record.strongly_unmixed = is_strongly_unmixed(g).verdict
    start = _elapsed(timings, 'strong_unmixedness', start)
    record.chordal = is_chordal(g).chordal
    record.bipartite = is_bipartite(g)
    try:
        record.traceable = is_traceable(g).traceable
    except SizeBoundError as error:
        record.bounds_exceeded.append(str(error))
    if connected:
        record.decomposable = is_decomposable(g).decomposable
        record.block_graph_is_tree = block_graph_is_tree(g)
        record.necessary_conditions = structural_necessary_conditions(
            g, family).all_hold
        record.good_cut_vertex = find_unmixed_cut_vertex(g).vertex
    start = _elapsed(timings, 'classes', start)
    if geometry:
        _add_geometry(record, g, family, fields, timings, start)
    return record


def _add_geometry(record, g, family, fields, timings, start):
    hirsch = hirsch_check(g, family)
    record.hirsch = hirsch.hirsch
    record.diameter = INFINITE if not hirsch.connected else hirsch.diameter
    record.height = hirsch.height
    start = _elapsed(timings, 'dual_graph', start)
    try:
        poset = build_poset(g)
    except SizeBoundError as error:
        record.cm = dict((field_name(field), None) for field in fields)
        record.bounds_exceeded.append(str(error))
        return
    certificate = cm_certificate(g, fields, poset=poset)
    record.cm = dict((field_name(field), certificate.verdicts[field])
                     for field in fields)
    record.convention_sensitive = certificate.convention_sensitive
    for field in fields:
        failure = certificate.first_failure(field)
        if failure is not None:
            record.cm_failure = {
                'field': field_name(field),
                'node': poset.nodes[failure.node].describe(),
                'degree': failure.degree,
                'rank': failure.rank,
            }
            break
    _elapsed(timings, 'cm', start)


def _labels(mask):
    return None if mask is None else labels_of(mask)


def check_record(record, sides=None):
    """Return the proven statements that `record` violates.

    The class statements are also checked on disconnected graphs, whose
    chordality, traceability and bipartiteness are decided per component.
    The block statements need a connected graph.

    Args:
        record: an `AnalysisRecord`.
        sides: for a decomposable graph, the records of its two sides;
            the decomposition statements are only checked when given.
    """
    violations = []
    known = record.cm_known
    for name, value in sorted(known.items()):
        if record.strongly_unmixed and not value:
            violations.append('strongly unmixed but not Cohen-Macaulay over %s'
                              % name)
        if value and not record.accessible:
            violations.append('Cohen-Macaulay over %s but not accessible'
                              % name)
    if record.strongly_unmixed and not record.accessible:
        violations.append('strongly unmixed but not accessible')
    # every property involved holds iff it holds on each component
    for name in ('chordal', 'traceable', 'bipartite'):
        if getattr(record, name):
            values = set([record.accessible, record.strongly_unmixed])
            values.update(known.values())
            if len(values) > 1:
                violations.append('%s graph: accessible, strongly unmixed '
                                  'and Cohen-Macaulay disagree' % name)
    if record.connected:
        if record.unmixed and record.block_graph_is_tree is False:
            violations.append('unmixed but the block graph is not a tree')
        if (record.accessible and record.cut_vertex_count >= 2 and
                record.necessary_conditions is False):
            violations.append('accessible but a structural necessary '
                              'condition fails')
    if known and all(known.values()):
        if not record.hirsch or record.diameter == INFINITE:
            violations.append('Cohen-Macaulay but not Hirsch')
        elif record.diameter > record.n - 1:
            violations.append('Cohen-Macaulay but the dual graph diameter '
                              'exceeds n - 1')
    if sides is not None:
        violations.extend(_decomposition_violations(record, sides))
    return violations


def _decomposition_violations(record, sides):
    first, second = sides
    violations = []
    if record.accessible != (first.accessible and second.accessible):
        violations.append('decomposable: accessibility differs from '
                          'that of the sides')
    for name, value in sorted(record.cm_known.items()):
        first_value = first.cm.get(name)
        second_value = second.cm.get(name)
        if first_value is None or second_value is None:
            continue
        if value != (first_value and second_value):
            violations.append('decomposable: Cohen-Macaulayness over %s '
                              'differs from that of the sides' % name)
    return violations


def findings_for(record):
    """Return ``(kind, message)`` pairs for the open-question cases."""
    findings = []
    known = record.cm_known
    if (record.accessible and record.cm_false_somewhere and
            not record.chordal and not record.traceable):
        failed = sorted(name for name, value in known.items() if not value)
        findings.append((FINDING_ACCESSIBLE_NOT_CM,
                         'accessible, not Cohen-Macaulay over %s'
                         % ', '.join(failed)))
    if len(set(known.values())) > 1:
        findings.append((FINDING_FIELD_DEPENDENT,
                         'Cohen-Macaulayness depends on the field: %s'
                         % json.dumps(known, sort_keys=True)))
    if record.convention_sensitive:
        findings.append((FINDING_CONVENTION_SENSITIVE,
                         'verdict flips if empty intervals count as acyclic'))
    if record.connected and not record.complete_components:
        if (record.unmixed and record.necessary_conditions and
                not record.accessible):
            findings.append((FINDING_NECESSARY_NOT_SUFFICIENT,
                             'necessary conditions pass, not accessible'))
        if record.accessible and record.good_cut_vertex is None:
            findings.append((FINDING_NO_UNMIXED_CUT_VERTEX,
                             'accessible, no cut vertex leaves an unmixed '
                             'graph'))
    if record.accessible and not record.strongly_unmixed:
        findings.append((FINDING_NOT_STRONGLY_UNMIXED,
                         'accessible, not strongly unmixed'))
    return findings


class SurveySummary(object):
    """Counts, violations and findings of a survey run.

    Attributes:
        total: number of graphs processed, reused records included.
        per_n: n -> Counter of flag combinations.
        violations: list of dictionaries naming graph and statements.
        findings: list of dictionaries with kind, graph and message.
        skipped: reason -> number of graphs not analyzed.
        reused: number of records taken from a checkpoint.
    """

    def __init__(self):
        self.total = 0
        self.per_n = {}
        self.violations = []
        self.findings = []
        self.skipped = Counter()
        self.reused = 0

    def add(self, record, violations=(), findings=()):
        self.total += 1
        self.per_n.setdefault(record.n, Counter())[record.combination()] += 1
        if violations:
            self.violations.append({'graph6': record.graph6,
                                    'key': record.key,
                                    'violations': list(violations)})
        for kind, message in findings:
            self.findings.append({'kind': kind, 'graph6': record.graph6,
                                  'key': record.key, 'message': message})

    def merge(self, other):
        """Return a summary combining this run and a later one."""
        merged = SurveySummary()
        for summary in (self, other):
            merged.total += summary.total
            for n, counts in summary.per_n.items():
                merged.per_n.setdefault(n, Counter()).update(counts)
            merged.violations.extend(summary.violations)
            merged.findings.extend(summary.findings)
            merged.skipped.update(summary.skipped)
            merged.reused += summary.reused
        return merged

    def finding_count(self, kind):
        return sum(1 for finding in self.findings if finding['kind'] == kind)

    @property
    def status(self):
        """One line on the accessibility versus Cohen-Macaulay question."""
        counterexamples = self.finding_count(FINDING_ACCESSIBLE_NOT_CM)
        if self.violations:
            return ('%d of %d graphs violate proven statements'
                    % (len(self.violations), self.total))
        if counterexamples:
            return ('%d of %d graphs are accessible but not Cohen-Macaulay'
                    % (counterexamples, self.total))
        return ('no accessible graph that is not Cohen-Macaulay among %d '
                'graphs' % self.total)

    def to_dict(self):
        return {
            'total': self.total,
            'per_n': dict((str(n), dict(counts))
                          for n, counts in sorted(self.per_n.items())),
            'violations': self.violations,
            'findings': self.findings,
            'skipped': dict(self.skipped),
            'status': self.status,
        }

    def __eq__(self, other):
        if not isinstance(other, SurveySummary):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result


def _record_checksum(data):
    text = json.dumps(data, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def encode_record_line(record):
    """Return the JSON line of `record`, without the newline."""
    data = record.to_dict()
    return json.dumps({'record': data, 'sha256': _record_checksum(data)},
                      sort_keys=True)


def _decode_record_line(path, lineno, line):
    try:
        entry = json.loads(line.decode('utf-8'))
        data = entry['record']
        checksum = entry['sha256']
    except (ValueError, KeyError, TypeError, UnicodeError) as error:
        raise CheckpointError(path, lineno, 'unparsable line (%s)' % error)
    if _record_checksum(data) != checksum:
        raise CheckpointError(path, lineno, 'checksum mismatch')
    try:
        record = AnalysisRecord.from_dict(data)
    except ValueError as error:
        raise CheckpointError(path, lineno, str(error))
    violations = check_record(record)
    if violations:
        raise TheoremViolation(record, violations)
    return record


def _scan_checkpoint(path):
    """Read a checkpoint file.

    Returns:
        A tuple (records, good_size, dropped): the valid records, the byte
        size of the valid prefix and the line number of a dropped last line
        (None if the file is intact).

    Raises:
        CheckpointError: if a line other than the last one is corrupt.
    """
    with io.open(path, 'rb') as checkpoint:
        data = checkpoint.read()
    lines = data.split(b'\n')
    complete = len(lines) - 1
    last = max([index for index, line in enumerate(lines) if line.strip()]
               or [-1])
    records = []
    good_size = 0
    offset = 0
    for index, line in enumerate(lines):
        lineno = index + 1
        end = offset + len(line) + (1 if index < complete else 0)
        if not line.strip():
            if index < complete:
                good_size = end
            offset = end
            continue
        try:
            if index == complete:
                raise CheckpointError(path, lineno, 'truncated line')
            records.append(_decode_record_line(path, lineno, line))
        except CheckpointError:
            if index == last:
                return records, good_size, lineno
            raise
        good_size = offset = end
    return records, good_size, None


def load_records(path):
    """Return the records of a checkpoint file, dropping a truncated tail.

    Raises:
        CheckpointError: on a corrupt line before the last one.
        TheoremViolation: if a stored record contradicts a proven statement.
    """
    records, _, dropped = _scan_checkpoint(path)
    if dropped is not None:
        logger.warning('%s: ignoring corrupt last line %d', path, dropped)
    return records


class RecordSink(object):
    """Append-only JSON lines store of analysis records keyed by canonical
    form.

    Args:
        path: the file to write.
        resume: if True and the file exists, keep its valid records and
            append; a corrupt last line is cut off. Otherwise the file is
            truncated.
    """

    def __init__(self, path, resume=False):
        self.path = path
        self.records = OrderedDict()
        mode = 'w'
        if resume and os.path.exists(path):
            records, good_size, dropped = _scan_checkpoint(path)
            if dropped is not None:
                logger.warning('%s: dropping corrupt last line %d',
                               path, dropped)
                with io.open(path, 'r+b') as checkpoint:
                    checkpoint.truncate(good_size)
            for record in records:
                self.records[record.key] = record
            mode = 'a'
        self._file = io.open(path, mode, encoding='utf-8', newline='\n')

    def __contains__(self, key):
        return key in self.records

    def __len__(self):
        return len(self.records)

    def get(self, key):
        return self.records.get(key)

    def write(self, record):
        self._file.write(encode_record_line(record) + '\n')
        self._file.flush()
        self.records[record.key] = record

    def close(self):
        self._file.close()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()


def generate_connected_graphs(n):
    """Yield one graph per isomorphism class of connected graphs on n
    vertices, labeled 1..n, in the order of their canonical forms.

    Every connected graph has a vertex whose removal leaves it connected,
    so the classes on n vertices are reached by joining a new vertex to a
    non-empty vertex set of each class on n - 1 vertices.

    Raises:
        SizeBoundError: if n exceeds `MAX_GENERATED_VERTICES`.
    """
    if n > MAX_GENERATED_VERTICES:
        raise SizeBoundError('generated graph', n, MAX_GENERATED_VERTICES)
    if n < 1:
        return
    forms = [canonical_form(Graph(1))]
    for size in range(2, n + 1):
        new_vertex = 1 << (size - 1)
        extended = set()
        for form in forms:
            base = parse_graph6(form)
            adjacency = list(base.adjacency) + [0]
            for neighbors in range(1, new_vertex):
                grown = list(adjacency)
                grown[size - 1] = neighbors
                rest = neighbors
                while rest:
                    low = rest & -rest
                    grown[low.bit_length() - 1] |= new_vertex
                    rest ^= low
                extended.add(canonical_form(
                    Graph._trusted(base.vertices | new_vertex, grown)))
        forms = sorted(extended)
        logger.debug('%d connected graphs on %d vertices', len(forms), size)
    for form in forms:
        yield parse_graph6(form)


def read_graph6_stream(path):
    """Yield the graphs of a graph6 file, one encoding per line."""
    with io.open(path, 'rb') as stream:
        for g in iter_graph6(stream):
            yield g


def _progress(iterable, enabled, total=None):
    tqdm = extra_packages.tqdm
    if enabled and tqdm is not None:
        return tqdm(iterable, total=total, desc='survey', unit='graph')
    return iterable


def _analyze_within_bounds(g, fields):
    """Return ``(record, None)`` or ``(None, reason)`` for a bound hit."""
    try:
        return analyze(g, fields), None
    except SizeBoundError as error:
        return None, str(error)


SourceEntry = namedtuple('SourceEntry', 'graph key state')

STATE_FRESH = 'fresh'
STATE_SEEN = 'seen'
STATE_DECOMPOSABLE = 'decomposable'


class SourceReader(object):
    """Reads a graph source once, in a single pass.

    Every graph is queued as a `SourceEntry` in source order, and only the
    graphs whose canonical form is neither seen before nor stored in the
    sink are yielded by `fresh_graphs`. The queue is filled by whoever
    consumes `fresh_graphs`, possibly the task thread of a process pool.

    Args:
        source: iterable of graphs.
        sink: a `RecordSink` or None.
        indecomposable_only: queue connected decomposable graphs as
            skipped instead of analyzing them.
    """

    def __init__(self, source, sink=None, indecomposable_only=False):
        self.source = source
        self.sink = sink
        self.indecomposable_only = indecomposable_only
        self.entries = deque()
        self.error = None

    def fresh_graphs(self):
        seen = set()
        try:
            for g in self.source:
                if (self.indecomposable_only and is_connected(g) and
                        is_decomposable(g).decomposable):
                    self.entries.append(
                        SourceEntry(g, None, STATE_DECOMPOSABLE))
                    continue
                key = canonical_form(g).decode('ascii')
                fresh = key not in seen and (self.sink is None or
                                             key not in self.sink)
                seen.add(key)
                self.entries.append(SourceEntry(
                    g, key, STATE_FRESH if fresh else STATE_SEEN))
                if fresh:
                    yield g
        except Exception as error:
            # raised again once the entries read before it are processed
            self.error = error

    def in_source_order(self, results):
        """Yield ``(entry, result)`` for every queued entry in order.

        Args:
            results: the analysis results of the fresh graphs, in order.

        Raises:
            Exception: the error reading the source failed with, after
                the entries read before it.
        """
        for result in results:
            while True:
                entry = self.entries.popleft()
                if entry.state == STATE_FRESH:
                    yield entry, result
                    break
                yield entry, None
        while self.entries:
            yield self.entries.popleft(), None
        if self.error is not None:
            raise self.error


def _analyzed_stream(graphs, fields, jobs):
    """Yield ``(record, reason)`` for the iterable `graphs` in its order.

    Graphs are drawn from `graphs` only as the analysis proceeds.
    """
    worker = functools.partial(_analyze_within_bounds, fields=fields)
    if jobs > 1:
        with Pool(processes=jobs) as pool:
            for result in pool.imap(worker, graphs):
                yield result
    else:
        for result in map(worker, graphs):
            yield result


def run_survey(source, assertions=ASSERT_THEOREMS, sink=None, jobs=1,
               progress=False, fields=None, indecomposable_only=False):
    """Analyze every graph of `source` and summarize.

    Records are produced in source order, also with several jobs, so the
    summary only depends on the source and the assertion set.

    Args:
        source: iterable of graphs.
        assertions: `ASSERT_THEOREMS` to raise on a violated proven
            statement, `ASSERT_NONE` to only record it.
        sink: a `RecordSink`; graphs whose canonical form is already in it
            are not analyzed again.
        jobs: number of worker processes.
        progress: show a progress bar if tqdm is installed.
        fields: field characteristics; defaults to ``BEI_FIELDS``.
        indecomposable_only: skip connected decomposable graphs.

    Returns:
        A `SurveySummary`.

    Raises:
        TheoremViolation: on the first violation if `assertions` is
            `ASSERT_THEOREMS`.
    """
    if assertions not in (ASSERT_THEOREMS, ASSERT_NONE):
        raise ValueError('Unknown assertion set: %r' % (assertions,))
    if fields is None:
        fields = fields_from_environment()
    reader = SourceReader(source, sink, indecomposable_only)
    results = _analyzed_stream(reader.fresh_graphs(), fields, jobs)
    summary = SurveySummary()
    known = {}
    analyzed = set()
    current_n = None
    for entry, result in _progress(reader.in_source_order(results),
                                   progress):
        g, key = entry.graph, entry.key
        if entry.state == STATE_DECOMPOSABLE:
            summary.skipped['decomposable'] += 1
            continue
        reused = False
        if entry.state == STATE_FRESH:
            record, reason = result
            known[key] = record
            analyzed.add(key)
            if record is None:
                logger.warning('skipping %s: %s', to_graph6(g), reason)
            elif sink is not None:
                sink.write(record)
        elif key not in analyzed:
            reused = True
            known[key] = sink.get(key)
        record = known[key]
        if record is None:
            summary.skipped['bounds'] += 1
            continue
        if reused:
            summary.reused += 1
        if record.n != current_n:
            current_n = record.n
            logger.info('surveying graphs on %d vertices', current_n)
        sides = None
        if assertions == ASSERT_THEOREMS and record.decomposable:
            sides = _side_records(g, known, fields)
        violations = check_record(record, sides)
        if violations and assertions == ASSERT_THEOREMS:
            raise TheoremViolation(record, violations)
        findings = findings_for(record)
        for kind, message in findings:
            logger.info('finding %s on %s: %s', kind, record.graph6, message)
        summary.add(record, violations, findings)
    return summary


def _side_records(g, known, fields):
    records = []
    for side in decomposition_sides(g):
        key = canonical_form(side).decode('ascii')
        if known.get(key) is None:
            known[key] = analyze(side, fields)
        records.append(known[key])
    return records


def gluing_experiment(g, v, h, w, fields=None, geometry=True):
    """Glue every side of G \\ {v} to every side of H \\ {w} along v = w.

    Args:
        g: a connected graph with cut vertex `v`.
        v: the cut vertex of `g`.
        h: a connected graph with cut vertex `w`, its other labels disjoint
            from those of `g`.
        w: the cut vertex of `h`.
        fields: field characteristics, defaults to ``BEI_FIELDS``.
        geometry: passed on to `analyze`.

    Returns:
        A `GluingReport` with the records of G and H and one
        `GluingOutcome` per pair of sides; a property counts as preserved
        unless it holds for G and H but fails for the glued graph.
    """
    g_record = analyze(g, fields, geometry)
    h_record = analyze(h, fields, geometry)
    both_accessible = g_record.accessible and h_record.accessible
    both_cm = g_record.cm_all and h_record.cm_all
    outcomes = []
    for g_part in components_after_removal(g, bit(v)).parts:
        for h_part in components_after_removal(h, bit(w)).parts:
            g_side = lowest_label(g_part)
            h_side = lowest_label(h_part)
            glued = glue_at_vertices(g, v, g_side, h, w, h_side)
            record = analyze(glued, fields, geometry)
            outcomes.append(GluingOutcome(
                g_side, h_side, glued, record,
                not both_accessible or record.accessible,
                not both_cm or record.cm_all is not False))
    return GluingReport(g_record, h_record, outcomes)
