import glob
import json
import subprocess
import sys

import pytest


def launch(*args):
    cmd = [sys.executable, 'launcher.py', *[str(arg) for arg in args]]
    return subprocess.run(cmd, timeout=120, capture_output=True, text=True)


@pytest.mark.parametrize('a, b', [(94, 78), (2, 1), (10, 1), (5, 5)])
def test_check_passes(a, b):
    result = launch('check', a, b)
    assert result.returncode == 0, f'check {a} {b} failed:\n{result.stdout}{result.stderr}'


@pytest.mark.parametrize('args, code', [
    (('check', 94, -1), 2),
    (('check', 78, 94), 2),
    (('params', 78, 94), 0),
    (('perimeter', 94, 78, '--format', 'csv'), 2),
    (('sweep', 1, 10, 1, 10, 0), 2),
])
def test_exit_codes(args, code):
    result = launch(*args)
    assert result.returncode == code, f'{args} should exit with {code}, got {result.returncode}'


def test_perimeter_json():
    result = launch('perimeter', 94, 78, '--format', 'json')
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report['unit'] == 'fraction'
    assert 1e-6 <= report['rel_err_oval'] <= 3e-6, f'got {report["rel_err_oval"]}'


def test_sweep_default_output():
    result = launch('-v', 'info', 'sweep', 1, 10, 1, 10)
    assert result.returncode == 0
    assert 'max rel err < 0.029%' in result.stdout
    # logs never mix with the command output
    assert 'INFO' in result.stderr and 'INFO' not in result.stdout

    csv_path = glob.glob('./output/result/sweep_*.csv')
    csv_path.sort()
    with open(csv_path[-1], 'r') as f:
        lines = f.read().splitlines()
    assert lines[0] == 'a,b,rel_err_percent'
    assert len(lines) == 704, f'should have 703 cells, got {len(lines) - 1}'


@pytest.mark.parametrize('mode', ['construction', 'overlay'])
def test_svg_default_output(mode):
    result = launch('svg', 94, 78, '--mode', mode)
    assert result.returncode == 0

    svg_path = glob.glob(f'./output/result/svg_{mode}_*.svg')
    svg_path.sort()
    with open(svg_path[-1], 'r', encoding='utf-8') as f:
        assert '<g id="layer-oval">' in f.read()


def test_bounds():
    result = launch('bounds')
    assert result.returncode == 0
    assert result.stdout.count('PROVEN') == 3
