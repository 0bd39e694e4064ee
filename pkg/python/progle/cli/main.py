#
#   Copyright 2021 The Progle Authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#

##
# @namespace progle.cli.main
# The `progle` command and its subcommands.
#
# Reports are written to stdout, or to --out where a command produces
# one. All logging goes to stderr. Each class of failure exits with its
# own code, see the kExitCode constants in @ref progle.constants.
#
# @envvar **PROGLE_THREADS** *int* Thread count used when --threads is
# not given.

import argparse
import sys

from threadpoolctl import threadpool_limits

from .. import __version__, constants
from .. import embeddingFiles
from ..RunConfig import RunConfig, resolveThreads
from ..evaluation.LabelSet import LabelSet
from ..evaluation.classification import evaluateEmbedding
from ..evaluation.similarity import clusterSeparation
from ..exceptions import (
    ConvergenceError, InvariantError, ParseError, ProgleException, ValidationError)
from ..graph.io import loadEdgeList, saveEdgeList, saveNodeIdMap
from ..graph.synthetic import randomRegularGraph, stochasticBlockModel
from ..logging import ConsoleLogger, LoggerInterface, SeverityFilter, setDefaultLogger
from ..pipeline import Pipeline
from .bench import formatBench, runBench


__all__ = ['main', 'buildParser', 'cmdEmbed', 'cmdEnhance', 'cmdEvaluate', 'cmdSynth',
           'cmdBench']


## @name Argument Types
## @{

def _floatList(text):
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated numbers, got '%s'" % text)


def _intList(text):
    try:
        return tuple(int(float(t)) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers, got '%s'" % text)

## @}


def _addConfigArguments(parser):
    group = parser.add_argument_group("embedding parameters")
    group.add_argument("--dim", type=int, default=constants.kDefault_Dimension,
                       help="embedding dimension d (default: %(default)s)")
    group.add_argument("--order", type=int, default=constants.kDefault_Order,
                       help="proximity order m (default: %(default)s)")
    group.add_argument("--dropout", type=float, default=constants.kDefault_Dropout,
                       help="edge dropout ratio of higher order masks (default: %(default)s)")
    group.add_argument("--lambda", dest="negativeRatio", type=float,
                       default=constants.kDefault_NegativeRatio,
                       help="negative-noise ratio (default: %(default)s)")
    group.add_argument("--mu", type=float, default=constants.kDefault_Mu,
                       help="centre of the band-pass modulator (default: %(default)s)")
    group.add_argument("--theta", type=float, default=constants.kDefault_Theta,
                       help="bandwidth of the band-pass modulator (default: %(default)s)")
    group.add_argument("--cheb-k", dest="chebK", type=int,
                       default=constants.kDefault_ChebyshevTerms,
                       help="Chebyshev terms (default: %(default)s)")
    group.add_argument("--clamp-negative", dest="clampNegative", action="store_true",
                       help="drop negative entries of the shifted log matrix")
    group.add_argument("--no-rescale", dest="noRescale", action="store_true",
                       help="use the modulator literally, even if its spectrum leaves [-1, 1]")
    group.add_argument("--tolerance", type=float, default=constants.kDefault_Tolerance,
                       help="relative residual tolerance of the truncated SVD")


def _addCommonArguments(parser):
    parser.add_argument("--seed", type=int, default=constants.kDefault_Seed,
                        help="seed of every random draw (default: %(default)s)")
    parser.add_argument("--threads", default=None,
                        help="thread cap, defaults to $%s or 1" % constants.kEnvVar_Threads)
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log details (-v), debugging output (-vv) or phase traces (-vvv)")


def buildParser():
    """
    @return argparse.ArgumentParser, The parser of the `progle`
    command. Each subcommand sets `func` to its cmd function.
    """
    parser = argparse.ArgumentParser(
        prog="progle", description="Sparse spectral network embedding.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    embed = commands.add_parser("embed", help="embed the nodes of an edge list")
    embed.add_argument("edges", help="edge list to embed")
    embed.add_argument("--out", required=True, help="embedding file to write")
    embed.add_argument("--binary", action="store_true",
                       help="write a float64 matrix with a JSON sidecar")
    embed.add_argument("--weighted", action="store_true", help="read a weight column")
    embed.add_argument("--raw-out", dest="rawOut",
                       help="also write the embedding before propagation")
    embed.add_argument("--node-map", dest="nodeMap", help="also write the node map")
    embed.add_argument("--dump-proximity", dest="dumpProximity",
                       help="write the proximity matrix as coordinate text")
    embed.add_argument("--dump-shifted", dest="dumpShifted",
                       help="write the shifted log matrix as coordinate text")
    _addConfigArguments(embed)
    _addCommonArguments(embed)
    embed.set_defaults(func=cmdEmbed)

    enhance = commands.add_parser(
        "enhance", help="propagate an external embedding through a graph")
    enhance.add_argument("edges", help="edge list of the graph")
    enhance.add_argument("embedding", help="embedding to enhance, text or binary")
    enhance.add_argument("--out", required=True, help="embedding file to write")
    enhance.add_argument("--binary", action="store_true",
                         help="write a float64 matrix with a JSON sidecar")
    enhance.add_argument("--weighted", action="store_true", help="read a weight column")
    enhance.add_argument("--groups", help="label file; report cosine separation of its groups")
    _addConfigArguments(enhance)
    _addCommonArguments(enhance)
    enhance.set_defaults(func=cmdEnhance)

    evaluate = commands.add_parser("evaluate", help="score an embedding on node labels")
    evaluate.add_argument("embedding", help="embedding to evaluate, text or binary")
    evaluate.add_argument("labels", help="'node label1 label2 ...' label file")
    evaluate.add_argument("--ratios", type=_floatList, default=constants.kDefault_Ratios,
                          help="comma separated train ratios (default: 0.1,...,0.9)")
    evaluate.add_argument("--trials", type=int, default=constants.kDefault_Trials,
                          help="splits per ratio (default: %(default)s)")
    evaluate.add_argument("--l2", type=float, default=constants.kDefault_L2,
                          help="L2 regularization strength (default: %(default)s)")
    evaluate.add_argument("--raw-features", dest="rawFeatures", action="store_true",
                          help="don't L2-normalize the embedding rows")
    evaluate.add_argument("--out", help="report file, defaults to stdout")
    _addCommonArguments(evaluate)
    evaluate.set_defaults(func=cmdEvaluate)

    synth = commands.add_parser("synth", help="write a synthetic graph")
    synth.add_argument("--nodes", type=int, required=True, help="node count n")
    synth.add_argument("--degree", type=int, default=10,
                       help="degree of the regular graph (default: %(default)s)")
    synth.add_argument("--blocks", type=_intList,
                       help="comma separated block sizes; draws a block model instead")
    synth.add_argument("--p-in", dest="pIn", type=float, default=0.1,
                       help="block model edge probability within blocks")
    synth.add_argument("--p-out", dest="pOut", type=float, default=0.005,
                       help="block model edge probability across blocks")
    synth.add_argument("--labels-out", dest="labelsOut",
                       help="write the block of each node as a label file")
    synth.add_argument("--out", required=True, help="edge list to write")
    _addCommonArguments(synth)
    synth.set_defaults(func=cmdSynth)

    bench = commands.add_parser("bench", help="time the pipeline on synthetic graphs")
    bench.add_argument("--scales", type=_intList, default=(1000, 10000),
                       help="comma separated node counts (default: 1000,10000)")
    bench.add_argument("--degree", type=int, default=10,
                       help="degree of every graph of the scale sweep (default: %(default)s)")
    bench.add_argument("--degrees", type=_intList,
                       help="comma separated degrees; sweeps density at --nodes instead")
    bench.add_argument("--nodes", type=int, default=10000,
                       help="node count of the degree sweep (default: %(default)s)")
    bench.add_argument("--trace-memory", dest="traceMemory", action="store_true",
                       help="report the peak traced memory of each run")
    bench.add_argument("--out", help="report file, defaults to stdout")
    _addConfigArguments(bench)
    _addCommonArguments(bench)
    bench.set_defaults(func=cmdBench)

    return parser


def _configFrom(args):
    return RunConfig(
        dim=args.dim, order=args.order, dropout=args.dropout, negativeRatio=args.negativeRatio,
        mu=args.mu, theta=args.theta, chebK=args.chebK, seed=args.seed,
        clampNegative=args.clampNegative, noRescale=args.noRescale, threads=args.threads,
        tolerance=args.tolerance)


def _writeEmbedding(embedding, path, binary, config):
    if binary:
        embeddingFiles.writeBinary(embedding, path, config)
    else:
        embeddingFiles.writeText(embedding, path)


def _writeReport(text, path, stdout):
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        stdout.write(text)


def _echoConfig(config, logger):
    logger.log("Run configuration: %s" % ", ".join("%s=%r" % i for i in config.items()),
               LoggerInterface.kInfo)


def cmdEmbed(args, logger, stdout):
    """
    Embeds a graph, writing the propagated embedding and a table of
    phase timings and matrix sizes.
    """
    graph, nodeIdMap = loadEdgeList(args.edges, weighted=args.weighted, logger=logger)
    config = _configFrom(args)
    _echoConfig(config, logger)

    pipeline = Pipeline(config, logger=logger, dumpProximityPath=args.dumpProximity,
                        dumpShiftedPath=args.dumpShifted)
    raw, final = pipeline.embedGraph(graph, nodeIdMap.labels())

    _writeEmbedding(final, args.out, args.binary, config)
    if args.rawOut:
        _writeEmbedding(raw, args.rawOut, args.binary, config)
    if args.nodeMap:
        saveNodeIdMap(nodeIdMap, args.nodeMap)

    phases = pipeline.phaseMilliseconds()
    lines = ["nodes\t%d" % graph.nodeCount(), "edges\t%d" % graph.edgeCount()]
    lines.extend("%s_nnz\t%d" % item for item in pipeline.entryCounts().items())
    lines.extend("%s_ms\t%.3f" % item for item in phases.items())
    lines.append("total_ms\t%.3f" % sum(phases.values()))
    stdout.write("\n".join(lines) + "\n")
    return constants.kExitCode_Success


def cmdEnhance(args, logger, stdout):
    """
    Propagates an external embedding through a graph. With --groups,
    the cosine separation of the label groups is reported before and
    after.
    """
    graph, nodeIdMap = loadEdgeList(args.edges, weighted=args.weighted, logger=logger)
    external = embeddingFiles.readEmbedding(args.embedding, logger=logger)
    config = _configFrom(args)
    _echoConfig(config, logger)

    pipeline = Pipeline(config, logger=logger)
    enhanced = pipeline.enhanceEmbedding(graph, external, nodeIdMap)
    _writeEmbedding(enhanced, args.out, args.binary, config)

    lines = ["propagation_ms\t%.3f" % pipeline.phaseMilliseconds()[Pipeline.kPhase_Propagation]]
    if args.groups:
        for name, embedding in (("before", external), ("after", enhanced)):
            labels = embedding.labels() or tuple(nodeIdMap.labels())
            nodes, groups = LabelSet.fromFile(args.groups, labels).primaryGroups()
            separation = clusterSeparation(embedding.vectors()[nodes], groups)
            lines.append("separation_%s\t%.6f" % (name, separation))
    stdout.write("\n".join(lines) + "\n")
    return constants.kExitCode_Success


def cmdEvaluate(args, logger, stdout):
    """
    Runs the node classification protocol and writes its report.
    """
    embedding = embeddingFiles.readEmbedding(args.embedding, logger=logger)
    rowLabels = embedding.labels()
    if rowLabels is None:
        rowLabels = [str(i) for i in range(embedding.nodeCount())]
    labels = LabelSet.fromFile(args.labels, rowLabels)

    report = evaluateEmbedding(
        embedding.vectors(), labels, ratios=args.ratios, trials=args.trials, seed=args.seed,
        l2=args.l2, normalizeRows=not args.rawFeatures, threads=args.threads, logger=logger)
    _writeReport(report.format(), args.out, stdout)
    return constants.kExitCode_Success


def cmdSynth(args, logger, stdout):
    """
    Writes a random regular graph, or with --blocks, a stochastic block
    model graph.
    """
    if args.blocks:
        graph, nodeIdMap, blocks = stochasticBlockModel(args.blocks, args.pIn, args.pOut, args.seed)
    else:
        graph, nodeIdMap = randomRegularGraph(args.nodes, args.degree, args.seed)
        blocks = None

    saveEdgeList(graph, args.out)
    if args.labelsOut:
        if blocks is None:
            raise ValidationError("--labels-out needs a block model (--blocks)")
        LabelSet([[b] for b in blocks.tolist()]).save(args.labelsOut, nodeIdMap.labels())

    stdout.write("nodes\t%d\nedges\t%d\n" % (graph.nodeCount(), graph.edgeCount()))
    return constants.kExitCode_Success


def cmdBench(args, logger, stdout):
    """
    Times the pipeline on random regular graphs of growing size, or of
    growing degree with --degrees.
    """
    if args.degrees:
        sizes = [(args.nodes, degree) for degree in args.degrees]
    else:
        sizes = [(nodes, args.degree) for nodes in args.scales]
    config = _configFrom(args)
    _echoConfig(config, logger)

    rows = runBench(sizes, config, traceMemory=args.traceMemory, logger=logger)
    _writeReport(formatBench(rows), args.out, stdout)
    return constants.kExitCode_Success


def _loggerFor(verbosity):
    logger = SeverityFilter(ConsoleLogger(colorOutput=False, stream=sys.stderr))
    if verbosity:
        logger.setSeverity(min(LoggerInterface.kDebugAPI, LoggerInterface.kProgress + verbosity))
    return logger


def main(argv=None, stdout=None):
    """
    Runs the `progle` command.

    @param argv list(str) [None] Arguments, defaults to sys.argv[1:].

    @param stdout file [None] Where reports are written, defaults to
    sys.stdout.

    @return int, The exit code.
    """
    stdout = stdout or sys.stdout
    try:
        args = buildParser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else constants.kExitCode_Failure

    logger = _loggerFor(args.verbose)
    setDefaultLogger(logger)
    try:
        args.threads = resolveThreads(args.threads)
        with threadpool_limits(limits=args.threads):
            return args.func(args, logger, stdout)
    except ParseError as exc:
        logger.log(str(exc), LoggerInterface.kError)
        return constants.kExitCode_Parse
    except ValidationError as exc:
        logger.log(str(exc), LoggerInterface.kError)
        return constants.kExitCode_Validation
    except ConvergenceError as exc:
        logger.log(str(exc), LoggerInterface.kError)
        return constants.kExitCode_Convergence
    except InvariantError as exc:
        logger.log(str(exc), LoggerInterface.kError)
        return constants.kExitCode_Invariant
    except (ProgleException, OSError) as exc:
        logger.log(str(exc), LoggerInterface.kError)
        return constants.kExitCode_Failure
    finally:
        setDefaultLogger(None)


if __name__ == "__main__":
    sys.exit(main())
