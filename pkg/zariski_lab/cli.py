import argparse
import json
import os
import sys
import traceback
from typing import Any, Dict, List, Optional

from . import __version__
from .config_parser import ConfigParser
from .decide import exists_rank_r
from .errors import (
    EXIT_OK,
    EXIT_UNEXPECTED,
    EXIT_VERIFICATION,
    NotIntegrallyClosed,
    ParseError,
    UnitIdeal,
    exit_code_for,
)
from .expressions import format_vector, parse_ideal, parse_vector
from .module_lab import build_mr, fitting_ideal, format_matrix, matrix_to_json, member_mr, phi
from .monomial_ideal import MonomialIdeal, mpower
from .polynomials import format_poly
from .survey import run_survey
from .utils import create_default_config, print_status
from .verify_examples import run_corpus

IDEAL_HELP = ("Ideal expression, e.g. '(x^2,y)*IC(x^3,y^2)' or 'm^3'. "
              "Only monomial ideals are accepted; factorizations are taken over monomial simple factors.")


def _emit_json(data: Dict[str, Any]):
    print(json.dumps(data, indent=2))


def load_ideal(text: str, args: argparse.Namespace, require_closed: bool = True) -> MonomialIdeal:
    """Parse an ideal; close it first when --close-first is given"""
    ideal = parse_ideal(text)
    if require_closed and ideal.is_unit:
        raise UnitIdeal(f"{text} is the unit ideal; a proper m-primary ideal is required")
    if require_closed and not ideal.is_integrally_closed():
        if not args.close_first:
            raise NotIntegrallyClosed(f"{ideal} is not integrally closed (use --close-first to normalize)")
        closed = ideal.integral_closure()
        print_status(f"Replaced {ideal} by its integral closure {closed}", 'warn')
        ideal = closed
    return ideal


def cmd_normalize(args) -> int:
    print(load_ideal(args.ideal, args, require_closed=False))
    return EXIT_OK


def cmd_closure(args) -> int:
    print(load_ideal(args.ideal, args, require_closed=False).integral_closure())
    return EXIT_OK


def cmd_factor(args) -> int:
    ideal = load_ideal(args.ideal, args)
    print(" * ".join(str(f) for f in ideal.zariski_factor()))
    return EXIT_OK


def cmd_colength(args) -> int:
    print(load_ideal(args.ideal, args, require_closed=False).colength())
    return EXIT_OK


def cmd_order(args) -> int:
    print(load_ideal(args.ideal, args, require_closed=False).order())
    return EXIT_OK


def cmd_mult(args) -> int:
    print(load_ideal(args.ideal, args, require_closed=False).multiplicity())
    return EXIT_OK


def cmd_matrix(args) -> int:
    ideal = load_ideal(args.ideal, args)
    presentation = build_mr(ideal, args.rank)
    print(format_matrix(presentation))
    _emit_json(matrix_to_json(presentation))
    return EXIT_OK


def cmd_fitting(args) -> int:
    ideal = load_ideal(args.ideal, args)
    presentation = build_mr(ideal, args.rank)
    k = args.k if args.k is not None else args.rank
    minors = fitting_ideal(presentation, k)
    target = mpower(k) if k < args.rank else ideal
    equal = minors.equals_monomial(target)
    if args.verbose:
        n0 = max(target.mem_index(), 1)
        print_status(f"Truncated image of I_{k}:\n{minors.truncated_image(n0).describe()}", 'info')
    _emit_json({
        "input": args.ideal,
        "normalized": str(ideal),
        "rank": args.rank,
        "k": k,
        "minors": [format_poly(g) for g in minors.gens],
        "target": str(target),
        "equal": equal,
    })
    if not equal:
        print_status(f"I_{k}(M_{args.rank}(I)) differs from {target}", 'fail')
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_member(args) -> int:
    ideal = load_ideal(args.ideal, args)
    vector = parse_vector(args.vector)
    _emit_json({
        "input": args.ideal,
        "normalized": str(ideal),
        "rank": args.rank,
        "vector": format_vector(vector),
        "phi": format_poly(phi(vector, args.rank)),
        "member": member_mr(vector, ideal, args.rank),
    })
    return EXIT_OK


def cmd_decide(args) -> int:
    ideal = load_ideal(args.ideal, args)
    workers = args.workers if args.workers is not None else args.settings['decide']['workers']
    decision = exists_rank_r(ideal, args.rank, workers=workers, source=args.ideal)
    if args.verbose:
        for split in decision.evidence:
            kind = 'ok' if split.qualifies else 'info'
            print_status(f"J = {split.j}, K = {split.k}: {split.to_json()}", kind)
    _emit_json(decision.to_json())
    return EXIT_OK


def cmd_verify_examples(args) -> int:
    results = run_corpus(args.corpus, progress=not args.no_progress, verbose=args.verbose,
                         cap=args.settings['local_ideal']['truncation_cap'])
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFICATION


def cmd_survey(args) -> int:
    settings = args.settings['survey']
    max_colength = args.max_colength if args.max_colength is not None else settings['max_colength']
    rank = args.rank if args.rank is not None else settings['rank']
    workers = args.workers if args.workers is not None else settings['workers']
    output_file = args.output
    if output_file is None:
        output_file = settings['output_file']
        if args.max_colength is not None or args.rank is not None:
            output_file = os.path.join(args.settings['output']['survey_dir'],
                                       f"survey_rank{rank}_colength{max_colength}.csv")
    run_survey(max_colength, rank=rank, workers=workers, output_file=output_file,
               progress=not args.no_progress)
    return EXIT_OK


COMMANDS = {
    'normalize': cmd_normalize,
    'closure': cmd_closure,
    'factor': cmd_factor,
    'colength': cmd_colength,
    'order': cmd_order,
    'mult': cmd_mult,
    'matrix': cmd_matrix,
    'fitting': cmd_fitting,
    'member': cmd_member,
    'decide': cmd_decide,
    'verify-examples': cmd_verify_examples,
    'survey': cmd_survey,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='zariski_lab',
        description='Integrally closed modules M_r(I), their ideals of minors, and existence decisions')
    parser.add_argument('--config', '-c', type=str,
                        help='Path to a YAML configuration file (defaults are used without one)')
    parser.add_argument('--verbose', action='store_true',
                        help='Dump echelon bases and per-split details to stderr')
    parser.add_argument('--close-first', action='store_true',
                        help='Replace an ideal that is not integrally closed by its closure')
    parser.add_argument('--create-default-config', type=str, metavar='PATH',
                        help='Write the default configuration to PATH and exit')
    parser.add_argument('--version', '-v', action='store_true',
                        help='Show version information')

    subparsers = parser.add_subparsers(dest='command')

    for name, help_text in [('normalize', 'Print the minimal generators'),
                            ('closure', 'Print the integral closure'),
                            ('factor', 'Print the Zariski factorization into simple factors'),
                            ('colength', 'Print lambda(R/I)'),
                            ('order', 'Print the order of I'),
                            ('mult', 'Print the multiplicity e(I)')]:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument('ideal', help=IDEAL_HELP)

    matrix = subparsers.add_parser('matrix', help='Print the presentation matrix of M_r(I)')
    matrix.add_argument('ideal', help=IDEAL_HELP)
    matrix.add_argument('--rank', '-r', type=int, required=True)

    fitting = subparsers.add_parser('fitting', help='Compare I_k(M_r(I)) with m^k or I')
    fitting.add_argument('ideal', help=IDEAL_HELP)
    fitting.add_argument('--rank', '-r', type=int, required=True)
    fitting.add_argument('--k', type=int, help='Minor size (default: the rank)')

    member = subparsers.add_parser('member', help='Test membership of a vector in M_r(I)')
    member.add_argument('ideal', help=IDEAL_HELP)
    member.add_argument('--rank', '-r', type=int, required=True)
    member.add_argument('--vector', type=str, required=True, help="Entries separated by ';', e.g. 'x^3;0;y'")

    decide = subparsers.add_parser('decide', help='Decide existence of an indecomposable module with I(M) = I')
    decide.add_argument('ideal', help=IDEAL_HELP)
    decide.add_argument('--rank', '-r', type=int, default=3)
    decide.add_argument('--workers', type=int, help='Threads used to evaluate splits')

    verify = subparsers.add_parser('verify-examples', help='Run the built-in corpus of worked examples')
    verify.add_argument('--corpus', type=str, help='Alternative corpus JSON file')
    verify.add_argument('--no-progress', action='store_true', help='Hide the progress bar')

    survey = subparsers.add_parser('survey', help='Decide all integrally closed monomial ideals up to a colength')
    survey.add_argument('--max-colength', type=int, help='Colength bound (default from config)')
    survey.add_argument('--rank', '-r', type=int, help='Rank (default from config)')
    survey.add_argument('--output', '-o', type=str, help='CSV output file (default from config)')
    survey.add_argument('--workers', type=int, help='Worker threads (default from config)')
    survey.add_argument('--no-progress', action='store_true', help='Hide the progress bar')

    return parser


def run(command: str, args: argparse.Namespace) -> int:
    """Run one subcommand and map library errors to exit codes"""
    try:
        return COMMANDS[command](args)
    except ParseError as e:
        print_status(f"Parse error: {e}", 'fail')
        return exit_code_for(e)
    except Exception as e:
        code = exit_code_for(e)
        if code == EXIT_UNEXPECTED:
            print_status(f"ERROR: {e}", 'warn')
        else:
            print_status(f"{type(e).__name__}: {e}", 'fail')
        if os.environ.get("DEBUG"):
            traceback.print_exc()
        return code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.version:
        print(f"zariski_lab version {__version__}")
        return EXIT_OK

    if args.create_default_config:
        create_default_config(args.create_default_config)
        print_status(f"Default configuration created at: {args.create_default_config}", 'ok')
        return EXIT_OK

    if not args.command:
        parser.print_help()
        return EXIT_UNEXPECTED

    try:
        config = ConfigParser(args.config).get_config()
    except Exception as e:
        print_status(f"ERROR: Could not load configuration: {e}", 'warn')
        if os.environ.get("DEBUG"):
            traceback.print_exc()
        return EXIT_UNEXPECTED

    args.settings = config
    return run(args.command, args)


if __name__ == "__main__":
    sys.exit(main())
