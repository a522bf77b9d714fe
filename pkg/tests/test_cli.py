# -*- coding: utf-8 -*-
import math
from pathlib import Path

import pytest

from ruelle import __version__
from ruelle.cli import build_parser, main

DATA = Path(__file__).resolve().parent.parent / 'data'


def values(output: str) -> dict[str, str]:
    pairs = (line.split('=', 1) for line in output.splitlines() if '=' in line)
    return {key: value for key, value in pairs}


def run(capsys, *argv) -> tuple[int, dict[str, str], str, str]:
    code = main([str(arg) for arg in argv])
    captured = capsys.readouterr()
    return code, values(captured.out), captured.out, captured.err


def test_alexander_figure_eight(capsys):
    code, out, _, _ = run(capsys, 'alexander', DATA / 'figure8.pres')
    assert code == 0
    assert float(out['R0']) == pytest.approx(6.25, rel=1e-6)


def test_negative_complex_arguments(capsys):
    code, out, _, _ = run(capsys, 'alexander', DATA / 'figure8.pres', '--xi', '-1,0')
    assert code == 0
    assert float(out['R0']) == pytest.approx(6.25, rel=1e-6)
    code, out, _, _ = run(capsys, 'ruelle-eval', '--spectrum', DATA / 'synthetic.csv', '--z', '-3,0', '--z', '3,-0.5')
    assert code == 0
    assert 'logR' in out
    code, out, _, _ = run(capsys, 'volume', '--shapes', '-0.5,0.8660254037844386')
    assert code == 0
    assert float(out['volume']) == pytest.approx(2 * 1.0149416064096536 / 3, abs=1e-8)


def test_output_is_deterministic(capsys):
    for argv in (
        ('alexander', DATA / 'trefoil.pres', '--twist', DATA / 'trefoil_su2.twist', '--all-columns'),
        ('epstein', DATA / 'square.lattice', '--s', '-0.5,0.5'),
        ('ruelle-eval', '--spectrum', DATA / 'synthetic.csv', '--z', '2,0', '--threads', '3', '--vol', '1.0'),
    ):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first[0] == 0
        assert first[2] == second[2]


def test_alexander_all_columns(capsys):
    code, _, text, _ = run(capsys, 'alexander', DATA / 'trefoil.pres', '--twist', DATA / 'trefoil_su2.twist', '--all-columns')
    assert code == 0
    assert text.count('column=') == 2


def test_alexander_rejects_trivial_character(capsys):
    code, _, _, text = run(capsys, 'alexander', DATA / 'figure8.pres', '--xi', '1,0')
    assert code == 3
    assert 'CuspidalityViolation' in text


def test_crosscheck_passes(capsys):
    code, _, text, _ = run(capsys, 'crosscheck', DATA / 'figure8.pres')
    assert code == 0
    assert text.strip().endswith('PASS')
    code, _, text, _ = run(capsys, 'crosscheck', DATA / 'trefoil.pres', '--twist', DATA / 'trefoil_su2.twist')
    assert code == 0
    assert 'PASS' in text


def test_crosscheck_non_acyclic(capsys):
    code, _, _, text = run(capsys, 'crosscheck', DATA / 'trefoil.pres', '--xi', '1,0')
    assert code == 3
    assert 'NonAcyclic' in text


def test_torsion_from_file(capsys):
    code, out, _, _ = run(capsys, 'torsion', '--complex', DATA / 'figure8.complex')
    assert code == 0
    assert out['betti'] == '0 0 0'
    assert float(out['tau_star']) == pytest.approx(2.5)
    assert float(out['R0']) == pytest.approx(6.25)


def test_torsion_from_presentation(capsys):
    code, out, _, _ = run(capsys, 'torsion', DATA / 'trefoil.pres', '--xi', '1,0')
    assert code == 0
    assert out['betti'] == '1 1 0'
    assert 'R0' not in out


def test_torsion_needs_input(capsys):
    code, _, _, _ = run(capsys, 'torsion')
    assert code == 2


def test_funceq(capsys):
    code, out, _, _ = run(capsys, 'funceq', '--vol', '2.0298832128', '--h', '2')
    assert code == 0
    assert float(out['c1']) == pytest.approx(-3 * 2.0298832128 / math.pi)
    assert float(out['c1']) == pytest.approx(-1.938, abs=1e-3)
    assert out['chi'] == '-6 0 2'
    assert out['order_at_0'] == '4'


def test_funceq_wrong_betti_count(capsys):
    code, _, _, _ = run(capsys, 'funceq', '--n', '2', '--vol', '1', '--h', '1')
    assert code == 2


def test_epstein(capsys):
    code, out, _, _ = run(capsys, 'epstein', DATA / 'square.lattice')
    assert code == 0
    assert complex(out['zeta[0][0]']) == pytest.approx(-math.pi * math.log(2), rel=1e-10)
    assert 'delta' in out


def test_ruelle_eval(capsys):
    code, out, _, _ = run(capsys, 'ruelle-eval', '--spectrum', DATA / 'synthetic.csv', '--z', '2,0', '--vol', '1.0')
    assert code == 0
    assert {'z', 'logR', 'R', 'funceq_residual'} <= out.keys()
    code, _, text, _ = run(capsys, 'ruelle-eval', '--format', 'csv', '--threads', '2',
                        '--spectrum', DATA / 'synthetic.csv', '--z', '2,0', '--z', '3,0.5', '--path', 'direct')
    assert code == 0
    assert text.splitlines()[0] == 'z,re_logR,im_logR'
    assert len(text.splitlines()) == 3


def test_ruelle_eval_empty(capsys):
    code, out, _, _ = run(capsys, 'ruelle-eval', '--spectrum', DATA / 'empty.csv', '--z', '1,0')
    assert code == 0
    assert out['logR'] == '0'
    assert out['R'] == '1'


def test_volume(capsys):
    shape = '0.5,0.8660254037844386'
    code, out, _, _ = run(capsys, 'volume', '--shapes', f'{shape};{shape}')
    assert code == 0
    assert float(out['volume']) == pytest.approx(2.0298832128, abs=1e-8)
    code, _, _, text = run(capsys, 'volume', '--shapes', '0.5,-1')
    assert code == 3
    assert 'DegenerateShape' in text


def test_l2torsion(capsys):
    code, out, _, _ = run(capsys, 'l2torsion', '--vol', '2.0298832128')
    assert code == 0
    assert float(out['log_tau2']) == pytest.approx(0.1076886, abs=1e-7)
    code, _, _, _ = run(capsys, 'l2torsion', '--vol', '-1')
    assert code == 2


def test_input_errors(capsys, tmp_path):
    code, _, _, _ = run(capsys, 'alexander', tmp_path / 'missing.pres')
    assert code == 2
    broken = tmp_path / 'broken.pres'
    broken.write_text('gens: x y\nrel: x z\n', encoding='utf-8')
    code, _, _, text = run(capsys, 'alexander', broken)
    assert code == 2
    assert 'UnknownGenerator' in text
    code, _, _, _ = run(capsys, 'alexander', DATA / 'figure8.pres', '--xi', 'a,b')
    assert code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as exit_info:
        build_parser().parse_args(['--version'])
    assert exit_info.value.code == 0
    assert __version__ in capsys.readouterr().out
