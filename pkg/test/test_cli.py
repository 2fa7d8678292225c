import glob
import json

import pytest

import launcher
from octoval import commands
from octoval.analysis.sweep import SweepGrid
from octoval.configuration import Configuration
from octoval.core.oval import angles_geometric


def run(capsys, *argv):
    code = launcher.main([str(arg) for arg in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_params(capsys):
    code, out, _ = run(capsys, 'params', 94, 78)
    assert code == 0
    assert 'r     = 64.7234' in out
    assert 'p     = 86\n' in out
    assert 'R     = 113.282' in out
    assert 'e     = (29.2766, 0)' in out
    assert 'rad (' in out and 'deg)' in out
    assert 'note' not in out


def test_params_swaps_unordered_axes(capsys):
    code, out, _ = run(capsys, 'params', 78, 94)
    assert code == 0
    assert 'swapped' in out
    assert 'r     = 64.7234' in out


def test_params_of_a_circle(capsys):
    code, out, _ = run(capsys, 'params', 5, 5)
    assert code == 0
    assert 'degenerates to the circle' in out


def test_params_json(capsys):
    code, out, _ = run(capsys, 'params', 2, 1, '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert data['k'] == pytest.approx([0.7, -0.6])
    assert data['degenerate'] is False


@pytest.mark.parametrize('argv', [
    ('params', 94, -1),
    ('params', 'nan', 1),
    ('params', 94, 78, '--format', 'csv'),
    ('perimeter', 0, 1),
    ('check', 78, 94),
    ('check', 94, -1),
])
def test_invalid_input_exits_with_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert 'error:' in err
    assert out == ''


def test_perimeter_text(capsys):
    code, out, _ = run(capsys, 'perimeter', 94, 78)
    assert code == 0
    assert 'kepler perimeter   = 540.354' in out
    assert 'eccentricity       = 0.5581' in out
    assert 'rel err oval' in out and '%' in out


def test_perimeter_json(capsys):
    code, out, _ = run(capsys, 'perimeter', 2, 1, '--format', 'json', '--samples', 64)
    assert code == 0
    data = json.loads(out)
    assert data['unit'] == 'fraction'
    assert 2.5e-5 <= data['rel_err_oval'] <= 3.0e-5
    assert data['samples'] == 64
    assert data['max_radial_dev'] > 0


def test_sweep_writes_csv(capsys, tmp_path):
    out_file = tmp_path / 'sweep.csv'
    code, out, _ = run(capsys, 'sweep', 1, 10, 1, 10, '-o', out_file)
    assert code == 0
    assert 'cells       = 703' in out
    assert 'max rel err < 0.029%' in out
    assert 'at (a, b) = (10, 1)' in out
    lines = out_file.read_text().splitlines()
    assert lines[0] == 'a,b,rel_err_percent'
    assert len(lines) == 704


def test_sweep_json_round_trip(capsys, tmp_path):
    out_file = tmp_path / 'sweep.json'
    code, _, _ = run(capsys, 'sweep', 1, 3, 1, 3, 0.5, '--format', 'json', '-o', out_file)
    assert code == 0
    grid = SweepGrid.from_dict(json.loads(out_file.read_text()))
    assert grid.step == 0.5
    assert len(grid.cells) == 15


def test_sweep_of_an_empty_grid(capsys, tmp_path):
    code, out, _ = run(capsys, 'sweep', 1, 2, 5, 6, '-o', tmp_path / 'empty.csv')
    assert code == 0
    assert 'cells       = 0' in out
    assert 'no cells' in out
    assert 'max rel err' not in out
    assert (tmp_path / 'empty.csv').read_text().splitlines() == ['a,b,rel_err_percent']


def test_sweep_default_output_path(capsys, tmp_path):
    Configuration.set_output_dir(str(tmp_path))
    code, _, _ = run(capsys, 'sweep', 1, 2, 1, 2, '--step', 0.5)
    assert code == 0
    assert len(glob.glob(f'{tmp_path}/result/sweep_*.csv')) == 1


@pytest.mark.parametrize('argv', [
    ('sweep', 1, 10, 1, 10, 0),
    ('sweep', 10, 1, 1, 10),
    ('sweep', 1, 1000, 1, 1000, 0.5),
    ('sweep', 1, 10, 1, 10, '--format', 'text'),
])
def test_sweep_invalid_input(capsys, tmp_path, argv):
    code, _, err = run(capsys, *argv, '-o', tmp_path / 'x.csv')
    assert code == 2
    assert 'error:' in err


def test_sweep_io_failure_exits_with_3(capsys, tmp_path):
    blocker = tmp_path / 'file'
    blocker.write_text('')
    code, _, err = run(capsys, 'sweep', 1, 2, 1, 2, '-o', blocker / 'sweep.csv')
    assert code == 3
    assert 'cannot write' in err


def test_svg(capsys, tmp_path):
    out_file = tmp_path / 'construction.svg'
    code, out, _ = run(capsys, 'svg', 94, 78, '-o', out_file)
    assert code == 0
    assert str(out_file) in out
    assert out_file.read_text(encoding='utf-8').startswith('<?xml')

    overlay = tmp_path / 'overlay.svg'
    code, _, _ = run(capsys, 'svg', 94, 78, '--mode', 'overlay', '--layers', 'oval', '-o', overlay)
    assert code == 0
    assert 'layer-ellipse' not in overlay.read_text(encoding='utf-8')


@pytest.mark.parametrize('flags', [('--width', 10), ('--margin', 0.5), ('--layers', 'oval,grid')])
def test_svg_invalid_options(capsys, tmp_path, flags):
    code, _, _ = run(capsys, 'svg', 94, 78, *flags, '-o', tmp_path / 'x.svg')
    assert code == 2


@pytest.mark.parametrize('a, b', [(94, 78), (2, 1), (5, 5), (10, 1), (1000, 1), (10000, 1)])
def test_check_passes(capsys, a, b):
    code, out, _ = run(capsys, 'check', a, b)
    assert code == 0
    assert out.count('PASS') == 6
    assert 'FAIL' not in out


def _skew_gamma(c):
    gamma, beta, delta, diagnostics = angles_geometric(c)
    return gamma + 1e-6, beta, delta, diagnostics


def test_check_reports_failures(capsys, monkeypatch):
    monkeypatch.setattr(commands, 'angles_geometric', _skew_gamma)
    code, out, _ = run(capsys, 'check', 94, 78)
    assert code == 1
    assert 'FAIL oracle equivalence' in out
    assert 'failed: oracle equivalence' in out


def test_check_json(capsys):
    code, out, _ = run(capsys, 'check', 94, 78, '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert data['passed'] is True
    assert len(data['checks']) == 6


def test_bounds(capsys):
    code, out, _ = run(capsys, 'bounds')
    assert code == 0
    assert out.count('PROVEN') == 3


def test_logs_go_to_stderr(capsys):
    code, out, err = run(capsys, '-v', 'info', 'params', 94, 78)
    assert code == 0
    assert 'INFO' in err
    assert 'INFO' not in out


def test_unparsable_number_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit) as info:
        launcher.main(['params', 'abc', '1'])
    assert info.value.code == 2
