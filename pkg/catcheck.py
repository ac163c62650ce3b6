#!/usr/bin/env python3
"""
CatCheck - Finite Verifier for Monoidal, Hopf and Simplicial Structures

Main script: parses description files, runs one verification pipeline and
prints a report. Exit status 0 means every check passed, 1 that a check
failed or was refused, 2 that an input file is malformed.
"""

import sys
import os

# ANSI color codes
RED = '\033[0;31m'
GREEN = '\033[0;32m'
YELLOW = '\033[1;33m'
NC = '\033[0m'  # No Color


# Check that the exact-arithmetic backend is installed
def check_environment():
    """Check if we're properly set up to run"""
    try:
        import sympy  # noqa: F401
    except ImportError:
        print(f"{YELLOW}▲{NC} Error: Required dependencies not found!", file=sys.stderr)
        print(file=sys.stderr)
        print("CatCheck needs sympy for exact matrix arithmetic over F_p and Q.", file=sys.stderr)
        print(file=sys.stderr)
        print("Solution:", file=sys.stderr)
        print("   pip install -r requirements.txt", file=sys.stderr)
        sys.exit(2)


# Check environment before importing our modules
check_environment()

import argparse

# Add modules directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'modules'))

from catcheck_commands import COMMANDS, run
from catcheck_utils import (
    CatCheckError,
    SchemaError,
    DEFAULT_ARITY_BOUND,
    DEFAULT_DIM_BOUND,
    DEFAULT_PRIME,
    DEFAULT_SEED,
    VERSION,
    status_print,
)

COMMAND_HELP = {
    'check-monoidal': 'Category and symmetric monoidal laws on a seeded population',
    'check-algebra': 'Associativity, unit and (if flagged) commutativity of an algebra',
    'check-bialgebra': 'Algebra, coalgebra and compatibility axioms of a bialgebra',
    'check-hopf': 'Decide the Hopf property through both shear maps',
    'derive-antipode': 'Derive the antipode from the shear inverse and verify it',
    'shear': 'Print both shear maps and check the shear identities',
    'operators-audit': 'Operator-category composition, pointed maps, Comm and Assoc',
    'segal': 'Segal condition of C^(x) over [n]_+ for n = 1..3',
    'nerve': 'Nerve of a finite category with simplicial identities',
    'hc-nerve': 'Homotopy-coherent nerve, coherent cubes and the adjunction unit',
    'horn-audit': 'Inner horn filling and the groupoid criterion for all horns',
    'interchange-audit': 'An algebra as a functor of operator categories and its nerve',
    'coproduct-audit': 'R (x) S as coproduct of commutative algebras and the pairing pushforward',
    'monoid-sweep': 'F_p[M] is Hopf exactly when M is a group, for small monoids',
    'corpus': 'Run every applicable command over the corpus directory',
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog='catcheck.py',
        description='CatCheck - finite verifier for monoidal, Hopf and simplicial structures',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='''
Commands:
    check-monoidal [FILE...]    Category and monoidal laws (default instance Mat(F_p))
    check-algebra FILE...       Algebra axioms
    check-bialgebra FILE...     Bialgebra axioms
    check-hopf FILE...          Hopf decision via shear invertibility
    derive-antipode FILE...     Antipode from the inverse shear
    shear FILE...               Shear maps and shear identities
    operators-audit [FILE...]   Operator categories and the Comm/Assoc operads
    segal [FILE...]             Segal condition up to [3]_+
    nerve FILE...               Nerve tables and simplicial identities
    hc-nerve [FILE...]          Homotopy-coherent nerve (walking homotopy if no file)
    horn-audit FILE...          Horn filling in nerves
    interchange-audit FILE...   Algebra functors O^(x) -> C^(x)
    coproduct-audit FILE [FILE] Coproduct of commutative algebras
    monoid-sweep                Hopf iff group for every monoid up to --dim-bound elements
    corpus [FILE...]            All applicable commands, against each file's "expect"

Exit status:
    0 all checks passed, 1 a check failed or was refused, 2 malformed input

Examples:
    python catcheck.py check-hopf corpus/group_algebra_c2.json
    python catcheck.py check-hopf corpus/idempotent_monoid.json --format json
    python catcheck.py derive-antipode corpus/group_algebra_s3.json --prime 2
    python catcheck.py nerve corpus/arrow.json --dim-bound 3
    python catcheck.py monoid-sweep --dim-bound 4
    python catcheck.py corpus --output report.json --format json
        '''
    )

    # Global options
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='Enable verbose output')
    parser.add_argument('-vvv', '--debug', action='store_true',
                        help='Enable debug output (very verbose)')
    parser.add_argument('--version', action='version', version=f'CatCheck {VERSION}')

    # Job options, accepted after every command
    job = argparse.ArgumentParser(add_help=False)
    job.add_argument('--prime', type=int, default=DEFAULT_PRIME,
                     help=f'Characteristic of the default matrix instance (default {DEFAULT_PRIME})')
    job.add_argument('--arity-bound', type=int, default=DEFAULT_ARITY_BOUND,
                     help=f'Largest operad arity and operator-category object (default {DEFAULT_ARITY_BOUND})')
    job.add_argument('--dim-bound', type=int, default=DEFAULT_DIM_BOUND,
                     help=f'Largest simplicial dimension, or monoid order for the sweep '
                          f'(default {DEFAULT_DIM_BOUND})')
    job.add_argument('--format', dest='report_format', choices=('text', 'json'), default='text',
                     help='Report format (default text)')
    job.add_argument('--seed', type=int, default=DEFAULT_SEED,
                     help=f'Seed for sampled checks (default {DEFAULT_SEED})')
    job.add_argument('--corpus', type=str,
                     help='Corpus directory (default $CATCHECK_CORPUS, then ./corpus)')
    job.add_argument('--output', type=str,
                     help='Write the report to FILE instead of stdout')
    job.add_argument('--no-timings', action='store_true',
                     help='Leave the timings section out of the report')

    # Subcommands
    subparsers = parser.add_subparsers(dest='command', help='Available commands')
    for name in list(COMMANDS) + ['corpus']:
        sub = subparsers.add_parser(name, parents=[job], help=COMMAND_HELP[name])
        sub.add_argument('inputs', nargs='*', metavar='FILE',
                         help='Description files (catcheck/v1 JSON)')
    return parser


def write_report(report, args):
    """Render the report and send it to --output or stdout"""
    include_timings = not args.no_timings
    if args.report_format == 'json':
        rendered = report.to_json(include_timings)
    else:
        color = args.output is None and sys.stdout.isatty()
        rendered = report.render_text(color=color, include_timings=include_timings)
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as f:
            f.write(rendered + "\n")
        if args.verbose or args.debug:
            status_print(f"Report written to {args.output}", "ok")
    else:
        print(rendered)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 2

    options = {
        'prime': args.prime,
        'arity_bound': args.arity_bound,
        'dim_bound': args.dim_bound,
        'report_format': args.report_format,
        'seed': args.seed,
        'corpus': args.corpus,
        'debug': args.debug,
    }

    if args.verbose or args.debug:
        status_print(f"Running {args.command} on {len(args.inputs)} input(s)")

    try:
        report = run(args.command, args.inputs, options)
    except SchemaError as e:
        status_print(f"Malformed input: {e}", "fail")
        return 2
    except CatCheckError as e:
        status_print(str(e), "fail")
        return 2

    write_report(report, args)
    code = report.exit_code()
    if args.verbose or args.debug:
        kind = "ok" if code == 0 else "fail"
        status_print(f"{args.command}: {len(report.results)} checks, exit {code}", kind)
    return code


if __name__ == "__main__":
    sys.exit(main())
