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

"""Command line interface of pybei.

:Usage:

    pybei analyze --edges graph.txt --poset dot
    pybei survey --max-n 6 --jsonl survey.jsonl --resume --jobs 4
    pybei cutsets --edges graph.txt

Exit codes: 0 success, 1 a proven statement was violated (the
counterexample is printed), 2 invalid input, 3 a size bound was hit.
"""
import argparse
import io
import itertools
import json
import logging
import sys

from pybei.cutsets import enumerate_cut_sets
from pybei.graph import GraphError, SizeBoundError, __version__
from pybei.graph import parse_edge_list, parse_graph6
from pybei.helpers import fields_from_environment, parse_fields
from pybei.ideal_geometry import dual_graph
from pybei.poset import build_poset
from pybei.survey import ASSERT_NONE, ASSERT_THEOREMS, CheckpointError
from pybei.survey import RecordSink, TheoremViolation, analyze
from pybei.survey import generate_connected_graphs, read_graph6_stream
from pybei.survey import run_survey

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2
EXIT_BOUND_EXCEEDED = 3


def _read_edge_list(path):
    with io.open(path, encoding='utf-8') as edge_file:
        return parse_edge_list(edge_file.read())


def _fields(args):
    if args.fields:
        return parse_fields(args.fields)
    return fields_from_environment()


def _input_graph(args):
    if args.edges is not None:
        return _read_edge_list(args.edges)
    return parse_graph6(args.graph6)


def _print_json(data):
    print(json.dumps(data, indent=2, sort_keys=True))


def _run_analyze(args):
    g = _input_graph(args)
    _print_json(analyze(g, _fields(args)).to_dict())
    if args.cutsets:
        print(enumerate_cut_sets(g).to_json())
    if args.poset == 'dot':
        sys.stdout.write(build_poset(g).to_dot())
    elif args.poset == 'json':
        print(build_poset(g).to_json())
    if args.dual_graph:
        print(dual_graph(g).to_json())
    return EXIT_OK


def _survey_source(args):
    if args.graph6_stream is not None:
        return read_graph6_stream(args.graph6_stream)
    if args.min_n > args.max_n:
        raise ValueError('--min-n %d exceeds --max-n %d'
                         % (args.min_n, args.max_n))
    return itertools.chain.from_iterable(
        generate_connected_graphs(n)
        for n in range(args.min_n, args.max_n + 1))


def _run_survey(args):
    fields = _fields(args)
    if args.jobs < 1:
        raise ValueError('--jobs must be positive, got %d' % args.jobs)
    sink = RecordSink(args.jsonl, resume=args.resume) if args.jsonl else None
    try:
        summary = run_survey(_survey_source(args), assertions=args.assertions,
                             sink=sink, jobs=args.jobs,
                             progress=args.progress, fields=fields,
                             indecomposable_only=args.indecomposable_only)
    finally:
        if sink is not None:
            sink.close()
    _print_json(summary.to_dict())
    logger.info(summary.status)
    return EXIT_OK


def _run_cutsets(args):
    print(enumerate_cut_sets(_read_edge_list(args.edges)).to_json())
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog='pybei',
        description='Cut sets, accessibility and Cohen-Macaulayness of '
                    'binomial edge ideals.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true',
                           help='log debug messages')
    verbosity.add_argument('-q', '--quiet', action='store_true',
                           help='log errors only')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    analyze_parser = subparsers.add_parser(
        'analyze', help='analyze a single graph')
    source = analyze_parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--edges', metavar='FILE',
                        help='edge-list file')
    source.add_argument('--graph6', metavar='STRING',
                        help='graph6 encoded graph')
    analyze_parser.add_argument('--fields', metavar='LIST',
                                help='fields, e.g. q,2,3 (default: '
                                     '$BEI_FIELDS or q,2,3)')
    analyze_parser.add_argument('--cutsets', action='store_true',
                                help='print the cut sets')
    analyze_parser.add_argument('--poset', choices=('dot', 'json'),
                                help='print the poset of primes')
    analyze_parser.add_argument('--dual-graph', action='store_true',
                                help='print the dual graph')
    analyze_parser.set_defaults(handler=_run_analyze)

    survey_parser = subparsers.add_parser(
        'survey', help='survey all small connected graphs or a graph6 file')
    stream = survey_parser.add_mutually_exclusive_group(required=True)
    stream.add_argument('--max-n', type=int, metavar='N',
                        help='largest number of vertices to generate')
    stream.add_argument('--graph6-stream', metavar='FILE',
                        help='file with one graph6 string per line')
    survey_parser.add_argument('--min-n', type=int, default=1, metavar='N',
                               help='smallest number of vertices to '
                                    'generate (default: 1)')
    survey_parser.add_argument('--jsonl', metavar='OUT',
                               help='write the records to this file')
    survey_parser.add_argument('--resume', action='store_true',
                               help='reuse the records already in --jsonl')
    survey_parser.add_argument('--jobs', type=int, default=1, metavar='K',
                               help='number of worker processes')
    survey_parser.add_argument('--assert', dest='assertions',
                               choices=(ASSERT_THEOREMS, ASSERT_NONE),
                               default=ASSERT_THEOREMS,
                               help='stop at the first violated theorem')
    survey_parser.add_argument('--fields', metavar='LIST',
                               help='fields, e.g. q,2,3')
    survey_parser.add_argument('--progress', action='store_true',
                               help='show a progress bar (needs tqdm)')
    survey_parser.add_argument('--indecomposable-only', action='store_true',
                               help='skip decomposable graphs')
    survey_parser.set_defaults(handler=_run_survey)

    cutsets_parser = subparsers.add_parser(
        'cutsets', help='print the cut sets of a graph as JSON')
    cutsets_parser.add_argument('--edges', metavar='FILE', required=True,
                                help='edge-list file')
    cutsets_parser.set_defaults(handler=_run_cutsets)
    return parser


def _report(error):
    sys.stderr.write('pybei: error: %s\n' % error)


def main(argv=None):
    """Run the command line interface and return the exit code."""
    args = _build_parser().parse_args(argv)
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    else:
        level = logging.WARNING
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.handler(args)
    except TheoremViolation as error:
        print(error.counterexample())
        _report(error)
        return EXIT_VIOLATION
    except SizeBoundError as error:
        _report(error)
        return EXIT_BOUND_EXCEEDED
    except (GraphError, CheckpointError, ValueError,
            IOError, OSError) as error:
        _report(error)
        return EXIT_INPUT_ERROR
