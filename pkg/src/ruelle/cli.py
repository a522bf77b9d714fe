# -*- coding: utf-8 -*-
'''Command-line front end

Exit codes: 0 success, 2 input or validation error, 3 mathematical
precondition, 4 tolerance failure (including a failed cross-check).
'''
import argparse
import cmath
import logging
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Iterable, Sequence

from pydantic import ValidationError

from .__meta import __version__
from .epstein.epstein import delta_constant, epstein_value, tau_nu
from .errors.base import RuelleError
from .errors.topology import NonAcyclic
from .formatting import format_complex, format_real, parse_complex
from .schemas.lattice import parse_lattices
from .schemas.shapes import ShapeList
from .schemas.spectrum import LengthSpectrum
from .schemas.twist import TwistData
from .settings import get_settings
from .topology.alexander import acyclicity_check, alexander, column_reports
from .topology.presentation import parse_presentation
from .topology.torsion import complex_from_presentation, parse_complex as parse_chain_complex, torsion_star
from .traceformula.funceq import c1_exact, chi_poly, order_at_origin
from .validators import UnitCharacter
from .volume.volume import l2_torsion_limit, l2_torsion_log, manifold_volume, tetra_volume
from .zeta.ruelle import funceq_residual, ruelle_value


log = logging.getLogger('RuelleCLI')

# Values such as "-1,0" or "-0.5,1;0.5,1" start with a sign, not an option dash
NUMERIC_VALUE = re.compile(r'^-\.?\d')

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_TOLERANCE = 4


def _emit(pairs: Iterable[tuple[str, str]]):
    for key, value in pairs:
        print(f'{key}={value}')


def _read(path: str) -> str:
    return Path(path).read_text(encoding='utf-8')


def _twist(args: argparse.Namespace, cuspidal: bool) -> TwistData:
    if args.twist is not None:
        return TwistData.parse(_read(args.twist))
    xi = parse_complex(args.xi) if args.xi is not None else complex(-1.0)
    UnitCharacter.validate(xi, cuspidal=cuspidal)
    return TwistData.from_character(xi)


def _optional(value: complex | float | None, real: bool = False) -> str:
    if value is None:
        return 'pole'
    return format_real(value) if real else format_complex(value)


def cmd_alexander(args: argparse.Namespace) -> int:
    presentation = parse_presentation(_read(args.presentation))
    rho = _twist(args, cuspidal=True)
    reports = column_reports(presentation, rho) if args.all_columns else [alexander(presentation, rho)]
    for report in reports:
        _emit([
            ('column', str(report.chosen_column)),
            ('delta0', str(report.delta0)),
            ('delta1', str(report.delta1)),
            ('value_at_1', _optional(report.value_at_1)),
            ('R0', _optional(report.special_value, real=True)),
        ])
    return EXIT_OK


def cmd_crosscheck(args: argparse.Namespace) -> int:
    settings = get_settings()
    presentation = parse_presentation(_read(args.presentation))
    rho = _twist(args, cuspidal=False)
    report = alexander(presentation, rho)
    if not acyclicity_check(report) or report.special_value is None:
        raise NonAcyclic('Δ_{K,ρ}(1) is zero or a pole, the twisted complex is not acyclic')
    torsion = torsion_star(complex_from_presentation(presentation, rho))
    if not torsion.acyclic:
        raise NonAcyclic(f'Twisted complex has Betti numbers {torsion.betti}')
    via_alexander = report.special_value
    via_torsion = torsion.tau_star ** 2
    difference = abs(via_alexander - via_torsion) / max(abs(via_alexander), abs(via_torsion))
    passed = difference < settings.tol
    print(f'{"route":<10} {"R(0,rho)":>20}')
    print(f'{"alexander":<10} {format_real(via_alexander):>20}')
    print(f'{"torsion":<10} {format_real(via_torsion):>20}')
    print(f'relative_difference={format_real(difference)}')
    print('PASS' if passed else 'FAIL')
    return EXIT_OK if passed else EXIT_TOLERANCE


def cmd_torsion(args: argparse.Namespace) -> int:
    if args.complex is not None:
        chain = parse_chain_complex(_read(args.complex))
    elif args.presentation is not None:
        chain = complex_from_presentation(parse_presentation(_read(args.presentation)), _twist(args, cuspidal=False))
    else:
        raise argparse.ArgumentTypeError('torsion needs a presentation or --complex')
    report = torsion_star(chain)
    pairs = [('betti', ' '.join(str(b) for b in report.betti))]
    pairs += [(f'logdet{p}', format_real(value)) for p, value in enumerate(report.per_degree_logdet)]
    pairs += [('log_tau_star', format_real(report.log_tau_star)), ('tau_star', format_real(report.tau_star))]
    if report.acyclic:
        pairs.append(('R0', format_real(report.tau_star ** 2)))
    _emit(pairs)
    return EXIT_OK


def cmd_funceq(args: argparse.Namespace) -> int:
    report = chi_poly(args.n, args.r, args.vol, args.delta, args.h)
    _emit([
        ('prefactor', f'({report.prefactor})*vol'),
        ('chi', ' '.join(str(c) for c in report.chi_coeffs)),
        ('X', ' '.join(str(c) for c in report.X_coeffs)),
        ('c1', format_real(report.c1)),
        ('c1_exact', str(c1_exact(args.n, args.r))),
    ])
    if args.h:
        _emit([('order_at_0', str(order_at_origin(args.n, args.h)))])
    return EXIT_OK


def cmd_epstein(args: argparse.Namespace) -> int:
    cusps = parse_lattices(_read(args.lattices))
    s = parse_complex(args.s)
    for index, cusp in enumerate(cusps):
        for character, lattice in enumerate(cusp.lattices):
            _emit([(f'zeta[{index}][{character}]', format_complex(epstein_value(lattice, s, args.radius)))])
        _emit([(f'tau[{index}]', format_complex(tau_nu(cusp, args.radius)))])
    _emit([('delta', format_complex(delta_constant(cusps, args.radius)))])
    return EXIT_OK


def cmd_ruelle(args: argparse.Namespace) -> int:
    spectrum = LengthSpectrum.parse(_read(args.spectrum))
    points = [parse_complex(text) for text in args.z]
    threads = args.threads or get_settings().threads
    with ThreadPoolExecutor(max_workers=threads) as pool:
        values = list(pool.map(lambda z: ruelle_value(spectrum, z, args.path), points))
    if args.format == 'csv':
        print('z,re_logR,im_logR')
        for z, value in zip(points, values):
            print(f'{format_complex(z)},{format_real(value.real)},{format_real(value.imag)}')
        return EXIT_OK
    for z, value in zip(points, values):
        _emit([('z', format_complex(z)), ('logR', format_complex(value)), ('R', format_complex(cmath.exp(value)))])
        if args.vol is not None:
            report = chi_poly(spectrum.n, spectrum.r, args.vol, args.delta)
            _emit([('funceq_residual', format_complex(funceq_residual(spectrum, report, z, args.path)))])
    return EXIT_OK


def cmd_volume(args: argparse.Namespace) -> int:
    shapes = ShapeList.parse(args.shapes)
    for index, z in enumerate(shapes.shapes):
        _emit([(f'D[{index}]', format_real(tetra_volume(z)))])
    _emit([('volume', format_real(manifold_volume(shapes)))])
    return EXIT_OK


def cmd_l2torsion(args: argparse.Namespace) -> int:
    _emit([
        ('log_tau2', format_real(l2_torsion_log(args.r, args.vol))),
        ('limit', format_real(l2_torsion_limit(args.r, args.vol))),
    ])
    return EXIT_OK


def _add_twist_options(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--twist', help='Twist file')
    group.add_argument('--xi', help='Rank-1 character as "re,im" (default -1,0)')


class NumericArgumentParser(argparse.ArgumentParser):
    '''Argument parser that reads negative "re,im" values as values
    '''
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = NUMERIC_VALUE


def build_parser() -> argparse.ArgumentParser:
    parser = NumericArgumentParser(prog='ruelle', description='Ruelle L-function invariants')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--verbose', action='store_true', help='Debug logging')
    commands = parser.add_subparsers(dest='command', required=True)

    sub = commands.add_parser('alexander', help='Twisted Alexander function and R(0, rho)')
    sub.add_argument('presentation')
    _add_twist_options(sub)
    sub.add_argument('--all-columns', action='store_true', help='Report every admissible column')
    sub.set_defaults(func=cmd_alexander)

    sub = commands.add_parser('crosscheck', help='R(0, rho) by the Alexander and torsion routes')
    sub.add_argument('presentation')
    _add_twist_options(sub)
    sub.set_defaults(func=cmd_crosscheck)

    sub = commands.add_parser('torsion', help='Modified torsion of a twisted chain complex')
    sub.add_argument('presentation', nargs='?')
    sub.add_argument('--complex', help='Chain complex file')
    _add_twist_options(sub)
    sub.set_defaults(func=cmd_torsion)

    sub = commands.add_parser('funceq', help='Functional-equation polynomial and c1')
    sub.add_argument('--n', type=int, default=1)
    sub.add_argument('--r', type=int, default=1)
    sub.add_argument('--vol', type=float, required=True)
    sub.add_argument('--delta', type=float, default=0.0)
    sub.add_argument('--h', type=int, nargs='*', default=None, help='h^{l+1}, l = 0..n-1')
    sub.set_defaults(func=cmd_funceq)

    sub = commands.add_parser('epstein', help='Epstein L-values, tau and delta of cusp lattices')
    sub.add_argument('lattices')
    sub.add_argument('--s', default='0,0', help='Evaluation point "re,im"')
    sub.add_argument('--radius', type=float, default=None, help='Theta truncation radius')
    sub.set_defaults(func=cmd_epstein)

    sub = commands.add_parser('ruelle-eval', help='Truncated log R from a length spectrum')
    sub.add_argument('--spectrum', required=True)
    sub.add_argument('--z', action='append', required=True, help='Point "re,im", repeatable')
    sub.add_argument('--path', choices=('factor', 'direct'), default='factor')
    sub.add_argument('--vol', type=float, default=None, help='vol(X) for the functional-equation residual')
    sub.add_argument('--delta', type=float, default=0.0)
    sub.add_argument('--threads', type=int, default=None, help='Worker threads')
    sub.add_argument('--format', choices=('text', 'csv'), default='text', help='Output format')
    sub.set_defaults(func=cmd_ruelle)

    sub = commands.add_parser('volume', help='Volume from tetrahedron shapes')
    sub.add_argument('--shapes', required=True, help='"re,im;re,im;..."')
    sub.set_defaults(func=cmd_volume)

    sub = commands.add_parser('l2torsion', help='L2-torsion constant for d = 3')
    sub.add_argument('--r', type=int, default=1)
    sub.add_argument('--vol', type=float, required=True)
    sub.set_defaults(func=cmd_l2torsion)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    '''Run the command line

    Args:
        argv (Sequence[str], optional): Arguments, defaults to sys.argv.

    Returns:
        int: Exit code
    '''
    args = build_parser().parse_args(argv)
    settings = get_settings()
    logging.basicConfig(level=logging.DEBUG if args.verbose else settings.log_level)
    try:
        return args.func(args)
    except RuelleError as e:
        log.error(e)
        print(f'error: {type(e).__name__}: {e}', file=sys.stderr)
        return e.exit_code
    except (ValidationError, ValueError, OSError, argparse.ArgumentTypeError) as e:
        log.error(e)
        print(f'error: {e}', file=sys.stderr)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
