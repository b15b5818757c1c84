#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Command-line code for :mod:`schubert`

Exit codes: ``0`` success, ``2`` methods or checks disagree, ``3`` invalid
input, ``4`` a resource limit was hit.

"""

import os
import sys
import pdb
import time
import logging
import argparse
from concurrent.futures import ProcessPoolExecutor

from schubert import __version__
from schubert.exc import *
from schubert.config import Config, ConfigManager
from schubert.cosets import (GrassmannShape, make_element, canonical_decomposition,
    elements_below)
from schubert.goodsets import (max_uniset_cardinality, multiplicity,
    multiplicity_by_recursion, iter_good_unisets, render_multipath)
from schubert.methods import METHODS, get_method
from schubert.polynomial import ideal_generators, jw_generators, buchberger_is_groebner, \
    squarefree_quotient_degree
from schubert.report import HilbertReport, MultiplicityReport, GroebnerReport, ConjectureReport
from schubert.tangent import PointedSchubertDatum, check_conjectures
from schubert.utils import MarkerFormatter, parse_entries

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISAGREE = 2
LOG_ENV = 'SCHUBERT_LOG'

_handler = None


## worker entry points, module level so they pickle

def _settings_manager(settings):
    mgr = ConfigManager(['argparse'])
    mgr.configs['argparse'] = Config(settings)
    return mgr


def _hilbert_job(name, w, m_max, settings):
    start = time.perf_counter()
    values = get_method(name, _settings_manager(settings))(w, m_max)
    return values, time.perf_counter() - start


def _groebner_job(w):
    generators = ideal_generators(w)
    return w, len(generators), buchberger_is_groebner(generators)


def _conjecture_job(w, tau, j_max, max_variables):
    return check_conjectures(PointedSchubertDatum(w, tau), j_max, max_variables)


class CLI(object):
    """
    Dispatcher based on parsed arguments. Holds
    all commands methods.

    :param config: Options resolved from argparse, environment and ini
    :type config: :class:`schubert.config.ConfigManager`
    :param args: parsed command line, for arguments that are not options
    :type args: `argparse.Namespace` instance

    """

    def __init__(self, config, args):
        self.config = config
        self.args = args

    def run(self):
        """Execute the command and return the exit code."""
        return getattr(self, self.args.command)()

    @property
    def shape(self):
        return GrassmannShape(self.args.d, self.args.n)

    def element(self, text):
        return make_element(self.shape, parse_entries(text))

    def check_lattice(self):
        shape = self.shape
        if shape.lattice_size > self.config.max_lattice:
            raise SchubertLimitExceeded("|I(%d,%d)| = %d exceeds max_lattice=%d"
                % (shape.d, shape.n, shape.lattice_size, self.config.max_lattice))

    def map(self, func, items):
        """Apply ``func`` to every argument tuple, in worker processes when ``jobs > 1``.

        Results keep the order of ``items``.
        """
        items = list(items)
        jobs = self.config.jobs
        if jobs <= 1 or len(items) <= 1:
            return [func(*item) for item in items]
        log.debug("Running %d items on %d workers", len(items), jobs)
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [executor.submit(func, *item) for item in items]
            return [future.result() for future in futures]

    def emit(self, report):
        output = self.config.output
        if output:
            with open(output, 'w') as f:
                report.print_formatted(self.config.format, stream=f)
            log.info("Report written to %s", output)
        else:
            report.print_formatted(self.config.format, self.config.highlight)
        return EXIT_OK if report.passed else EXIT_DISAGREE

    def hilbert(self):
        """Hilbert function of the tangent cone at the identity, one vector per method."""
        w = self.element(self.args.w)
        names = [name.strip() for name in self.args.methods.split(',') if name.strip()]
        for name in names:
            get_method(name, self.config).check_limits(w, self.args.m_max)
        settings = self.config.as_dict()
        results = self.map(_hilbert_job, [(name, w, self.args.m_max, settings) for name in names])
        for name, (values, elapsed) in zip(names, results):
            log.debug("%s took %.3fs", name, elapsed)
        report = HilbertReport(w.shape, w,
            dict((name, values) for name, (values, elapsed) in zip(names, results)),
            dict((name, elapsed) for name, (values, elapsed) in zip(names, results)))
        if not report.passed:
            log.error("Methods disagree for %s", w)
        return self.emit(report)

    def mult(self):
        """Multiplicity at the identity, cross-checked against the square-free quotient."""
        w = self.element(self.args.w)
        chain, d_w = canonical_decomposition(w)
        squarefree = None
        paths = []
        if w.shape.nroots <= self.config.max_roots:
            top, mult, method = max_uniset_cardinality(w), multiplicity(w), 'faces'
            if w.shape.lattice_size <= self.config.max_lattice:
                squarefree = squarefree_quotient_degree(jw_generators(w))
            else:
                log.warning("Square-free cross-check skipped, |I(%d,%d)| exceeds max_lattice",
                    w.shape.d, w.shape.n)
            for k, S in enumerate(iter_good_unisets(w, top)):
                if k >= self.args.show_paths:
                    break
                paths.append(render_multipath(S))
        else:
            log.info("%s has %d roots, using the difference equation", w.shape, w.shape.nroots)
            top, mult = multiplicity_by_recursion(w)
            method = 'recursion'
        report = MultiplicityReport(w.shape, w, d_w, chain, top, mult, method, squarefree, paths)
        if not report.passed:
            log.error("Square-free quotient disagrees: %r", report['squarefree'])
        return self.emit(report)

    def groebner(self):
        """Buchberger check of the Plücker generators."""
        if self.args.all:
            self.check_lattice()
            elements = self.shape.elements()
            if self.args.sample:
                size = len(elements)
                k = min(self.args.sample, size)
                elements = [elements[i * size // k] for i in range(k)]
        elif self.args.sample:
            raise SchubertInvalidInput("--sample only applies together with --all")
        else:
            elements = [self.element(self.args.w)]
        results = self.map(_groebner_job, [(w,) for w in elements])
        report = GroebnerReport(self.shape, results)
        for w, ngens, ok in results:
            if not ok:
                log.error("Generators of %s are not a Groebner basis", w)
        return self.emit(report)

    def conjecture(self):
        """Counts at a fixed point against the tangent cone oracle."""
        j_max = self.config.j_max
        if self.args.all_pairs:
            self.check_lattice()
            pairs = [(w, tau) for w in self.shape.elements() for tau in elements_below(w)]
        else:
            if not (self.args.w and self.args.tau):
                raise SchubertInvalidInput("conjecture needs -w and -t, or --all-pairs")
            datum = PointedSchubertDatum(self.element(self.args.w), self.element(self.args.tau))
            pairs = [(datum.w, datum.tau)]
        max_variables = self.config.oracle_max_variables
        checks = self.map(_conjecture_job, [(w, tau, j_max, max_variables) for w, tau in pairs])
        report = ConjectureReport(self.shape, checks)
        for failed in report['failed']:
            log.error("Conjecture check failed for w=%s tau=%s", failed['w'], failed['tau'])
        return self.emit(report)


def setup_logging(args, nocolors=None):
    """Install one stream handler on the root logger.

    ``--debug`` and ``--quiet`` win over :envvar:`SCHUBERT_LOG`.
    """
    global _handler
    logger = logging.getLogger()
    if _handler is not None:
        logger.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    if args.nocolors or nocolors:
        _handler.setFormatter(logging.Formatter("%(message)s"))
    else:
        _handler.setFormatter(MarkerFormatter("%(message)s"))
    logger.addHandler(_handler)

    if args.debug:
        logger.setLevel(logging.DEBUG)
    elif args.quiet:
        logger.setLevel(logging.WARNING)
    else:
        level = getattr(logging, os.environ.get(LOG_ENV, 'info').upper(), None)
        logger.setLevel(level if isinstance(level, int) else logging.INFO)


class SchubertArgumentParser(argparse.ArgumentParser):
    """Argument parser that exits with the invalid input code.

    Status ``2`` is reserved for disagreeing methods.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(SchubertInvalidInput.exit_code, "%s: error: %s\n" % (self.prog, message))


def build_parser():
    main_parser = SchubertArgumentParser(prog='schubert',
        description="Hilbert functions and multiplicities of tangent cones "
                    "of Schubert varieties in Grassmannians.")
    main_parser.add_argument('-v', '--version', action='version',
        version='%(prog)s ' + __version__)

    # global options
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("-d", action='store', dest="d", type=int, required=True,
        help="Dimension of the subspaces")
    parser.add_argument("-n", action='store', dest="n", type=int, required=True,
        help="Dimension of the ambient space")
    parser.add_argument("--config-file", action='store', dest="config_file",
        default=None, help="Path to a config file, created from a template if missing")
    parser.add_argument('--nocolors', action='store_true', dest='nocolors', default=None,
        help=Config.allowed_options['nocolors'][0])
    format_group = parser.add_mutually_exclusive_group()
    format_group.add_argument("--json", action='store_const', const='json', dest="format",
        help="Print the report as JSON")
    format_group.add_argument("--csv", action='store_const', const='csv', dest="format",
        help="Print the report as CSV")
    parser.add_argument("--highlight", action='store', dest="highlight", metavar="FORMATTER",
        help=Config.allowed_options['highlight'][0])
    parser.add_argument("-o", "--output", action='store', dest="output", metavar="FILE",
        help=Config.allowed_options['output'][0])
    parser.add_argument("--jobs", action='store', dest="jobs", type=int, metavar="N",
        help=Config.allowed_options['jobs'][0])
    parser.add_argument("--max-degree", action='store', dest="max_degree", type=int,
        help=Config.allowed_options['max_degree'][0])
    parser.add_argument("--max-lattice", action='store', dest="max_lattice", type=int,
        help=Config.allowed_options['max_lattice'][0])

    logging_group = parser.add_mutually_exclusive_group()
    logging_group.add_argument("-q", "--quiet", action='store_true',
        dest="quiet", default=False, help="Show less output.")
    logging_group.add_argument("--debug", action='store_true',
        dest="debug", default=False, help="Show debug information.")

    ## subcommands
    subparsers = main_parser.add_subparsers(title="commands", dest="command")
    subparsers.required = True

    parser_hilbert = subparsers.add_parser('hilbert', parents=[parser],
        help="Hilbert function of the tangent cone at the identity",
        description="Compute h(0..M) with several independent methods and compare them")
    parser_hilbert.add_argument("-w", action='store', dest="w", required=True,
        help="Element of I(d,n), comma separated")
    parser_hilbert.add_argument("-m", action='store', dest="m_max", type=int, required=True,
        help="Largest degree")
    parser_hilbert.add_argument("--methods", action='store', dest="methods",
        default=",".join(METHODS), help="Comma separated methods: %s" % ", ".join(METHODS))

    parser_mult = subparsers.add_parser('mult', parents=[parser],
        help="Multiplicity at the identity",
        description="Multiplicity at the identity and its square-free cross-check")
    parser_mult.add_argument("-w", action='store', dest="w", required=True,
        help="Element of I(d,n), comma separated")
    parser_mult.add_argument("--show-paths", action='store', dest="show_paths", type=int,
        default=0, metavar="K", help="Draw up to K maximal good unisets")

    parser_groebner = subparsers.add_parser('groebner', parents=[parser],
        help="Buchberger check of the Pluecker generators",
        description="Check that the Pluecker generators form a Groebner basis")
    target = parser_groebner.add_mutually_exclusive_group(required=True)
    target.add_argument("-w", action='store', dest="w",
        help="Element of I(d,n), comma separated")
    target.add_argument("--all", action='store_true', dest="all",
        help="Every element of I(d,n)")
    parser_groebner.add_argument("--sample", action='store', dest="sample", type=int,
        default=0, metavar="K", help="With --all, check K evenly spaced elements")

    parser_conjecture = subparsers.add_parser('conjecture', parents=[parser],
        help="Tangent cone counts at a fixed point against the oracle",
        description="Compare good multiset counts at tau with the tangent cone of X(w) at tau")
    parser_conjecture.add_argument("-w", action='store', dest="w",
        help="Element of I(d,n), comma separated")
    parser_conjecture.add_argument("-t", action='store', dest="tau",
        help="Fixed point tau <= w, comma separated")
    parser_conjecture.add_argument("--all-pairs", action='store_true', dest="all_pairs",
        help="Every pair tau <= w of I(d,n)")
    parser_conjecture.add_argument("-j", action='store', dest="j_max", type=int,
        help=Config.allowed_options['j_max'][0])
    return main_parser


def main(args=None):
    """Parse command-line options and do it.
    Core function for schubert command.

    Dispatches commands to :class:`schubert.cli.CLI`

    :returns: exit code
    """
    args = build_parser().parse_args(sys.argv[1:] if args is None else args)
    setup_logging(args)

    try:
        if args.config_file:
            config_mgr = ConfigManager.load_from_ini(args.config_file)
        else:
            config_mgr = ConfigManager()
            config_mgr.configs['env'] = Config.from_env()
        config_mgr.configs['argparse'] = Config.from_argparse(args)
        if config_mgr.nocolors and not args.nocolors:
            setup_logging(args, nocolors=True)
        return CLI(config_mgr, args).run()
    except SchubertException as e:
        log.error("%s: %s", e.__class__.__name__, e)
        return e.exit_code
    except Exception:
        # enter pdb debugger when debugging is enabled
        if args.debug:
            pdb.post_mortem()
        raise


if __name__ == "__main__":
    sys.exit(main())
