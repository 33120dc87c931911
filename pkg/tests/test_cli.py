import json
import os

import pytest

from oooooob.classifiers import Classifier, ClassifierId
from oooooob.classifiers.common import applicable
from oooooob.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from oooooob.models.memo import ConflictingEntryError
from oooooob.models.position import Outcome, Variant
from oooooob.verify import harness

TINY_PROFILE = '''\
max_states: 100000
mismatch_cap: 10
workers: 1
sweeps:
  c_345:
    - {variant: C, region: {kind: pile_count, k: 3, max_size: 5}}
  b_k_piles:
    - {variant: B, region: {kind: pile_count, k: 3, max_size: 4}}
  conjecture_b_parity:
    - {variant: B, region: {kind: pile_count, k: 3, max_size: 5, min_size: 2}}
parity_function:
  - {region: {kind: counts, bounds: [2, 2, [2, 3]]}}
conjecture_c_mod3:
  - {region: {kind: counts, bounds: [[2, 3], [2, 3]]}}
'''


@pytest.fixture
def profile(tmp_path):
    path = tmp_path / 'tiny.yaml'
    path.write_text(TINY_PROFILE, encoding='utf-8')
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize('variant, piles, expected', [
    ('B', '1,1', 'N'),
    ('B', '2,2', 'P'),
    ('A', '2,4,6,8', 'P'),
    ('C', '1,1,3', 'P'),
])
def test_outcome(capsys, variant, piles, expected):
    assert _run(capsys, 'outcome', '--variant', variant, '--position', piles) == \
        (EXIT_OK, f'{expected}\n')


def test_outcome_json(capsys):
    code, out = _run(capsys, 'outcome', '--variant', 'b', '--position', '1, 1', '--format', 'json')
    assert code == EXIT_OK
    assert json.loads(out) == {'variant': 'B', 'position': '1,1', 'outcome': 'N'}


def test_best_move(capsys):
    assert _run(capsys, 'best-move', '--variant', 'B', '--position', '2,2') == (EXIT_OK, 'none\n')
    assert _run(capsys, 'best-move', '--variant', 'B', '--position', '1,2') == (EXIT_OK, '2\n')
    code, out = _run(capsys, 'best-move', '--variant', 'B', '--position', '2,2', '--format', 'json')
    assert json.loads(out)['move'] is None


def test_classify(capsys):
    code, out = _run(capsys, 'classify', '--position', '1,1,3', '--variant', 'C')
    assert code == EXIT_OK
    assert 'c_345 C P' in out.splitlines()
    code, out = _run(capsys, 'classify', '--position', '1,1,3', '--format', 'json')
    document = json.loads(out)
    assert document['position'] == '1,1,3'
    assert {'classifier': 'c_345', 'variant': 'C', 'outcome': 'P'} in document['verdicts']


@pytest.mark.parametrize('argv', [
    [],
    ['outcome', '--variant', 'B', '--position', 'x'],
    ['outcome', '--variant', 'D', '--position', '1'],
    ['solve', '--variant', 'B', '--region', 'square:3'],
    ['grid', '--kind', 'spiral'],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE


def test_unknown_lemma(capsys, profile):
    assert main(['verify', '--lemma', 'b_nine_piles', '--config', profile]) == EXIT_USAGE
    assert 'b_nine_piles' in capsys.readouterr().err


def test_missing_profile(capsys, tmp_path):
    assert main(['verify', '--lemma', 'c_345', '--config', str(tmp_path / 'no.yaml')]) == EXIT_USAGE


def test_budget_exceeded(capsys):
    argv = ['outcome', '--variant', 'B', '--position', '2,3,3,3', '--max-states', '1']
    assert main(argv) == EXIT_BUDGET


def test_verify(capsys, profile):
    code, out = _run(capsys, 'verify', '--lemma', 'c_345', '--config', profile,
                     '--workers', '1', '--format', 'json')
    assert code == EXIT_OK
    document = json.loads(out)
    assert document['classifier'] == 'c_345'
    assert document['status'] == 'PASS'
    assert document['region'] == {'kind': 'pile_count', 'k': 3, 'max_size': 5, 'min_size': 1}


def test_verify_failure_exit_code(capsys, profile, monkeypatch):
    always_p = Classifier(ClassifierId.B_K_PILES, lambda v, p: applicable(Outcome.P),
                          frozenset({Variant.B}))
    monkeypatch.setattr(harness, 'get_classifier', lambda _: always_p)
    code, out = _run(capsys, 'verify', '--lemma', 'b_k_piles', '--config', profile)
    assert code == EXIT_FAIL
    assert out.startswith('FAIL b_k_piles [B]')


def test_conjectures(capsys, profile):
    code, out = _run(capsys, 'conjectures', '--config', profile, '--format', 'csv')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == 'classifier,variant,region,states_checked,applicable,mismatch_count,status'
    assert [line.split(',')[0] for line in lines[1:]] == \
        ['conjecture_b_parity', 'conjecture_b_parity_function', 'conjecture_c_mod3']
    assert [line.split(',')[-1] for line in lines[1:]] == ['PASS', 'PASS', 'PARTIAL']


def test_enumerate(capsys):
    assert _run(capsys, 'enumerate', '--region', 'pile-count:2:2') == \
        (EXIT_OK, '1,1\n1,2\n2,2\n')
    assert _run(capsys, 'enumerate', '--region', 'pile-count:2:2', '--format', 'csv') == \
        (EXIT_OK, 'position\n"1,1"\n"1,2"\n"2,2"\n')
    code, out = _run(capsys, 'enumerate', '--region', 'ones-big:1:1', '--format', 'json')
    assert json.loads(out) == ['', '1', '1,1']


def test_solve(capsys):
    code, out = _run(capsys, 'solve', '--variant', 'B', '--region', 'pile-count:2:2')
    assert code == EXIT_OK
    assert out == 'position,outcome\n"1,1",N\n"1,2",N\n"2,2",P\n'


def test_grid(capsys):
    code, out = _run(capsys, 'grid', '--kind', 'ones-big', '--max-n', '1', '--max-k', '3')
    assert code == EXIT_OK
    assert out.splitlines() == ['n\\k | 0 1 2 3', '----+--------', '0   | P     P', '1   |     P']


def test_output_file(capsys, tmp_path):
    path = tmp_path / 'out.txt'
    code, out = _run(capsys, 'outcome', '--variant', 'A', '--position', '2,4,6,8',
                     '--output', str(path))
    assert (code, out) == (EXIT_OK, '')
    assert path.read_text(encoding='utf-8') == 'P\n'


def test_tables(capsys, tmp_path):
    code, out = _run(capsys, 'tables', '--n', '4', '--output', str(tmp_path))
    expected = os.path.join(str(tmp_path), 'base_cases_max4.txt')
    assert (code, out) == (EXIT_OK, f'{expected}\n')
    with open(expected, 'r', encoding='utf-8') as f:
        assert f.readline().startswith('# oooooob base-case table')


@pytest.mark.parametrize('check', [
    "{variant: C, region: {kind: square, k: 3}}",
    "{variant: B, region: {kind: pile_count, k: 3, max_size: 5}}",
    "{variant: C}",
])
def test_bad_profile_entries_are_usage_errors(capsys, tmp_path, check):
    path = tmp_path / 'bad.yaml'
    path.write_text(f'sweeps:\n  c_345:\n    - {check}\n', encoding='utf-8')
    assert main(['verify', '--lemma', 'c_345', '--config', str(path)]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith('oooooob: error: ')


def test_bad_state_budget_variable(capsys, monkeypatch):
    monkeypatch.setenv('OOOOOOB_MAX_STATES', 'lots')
    assert main(['outcome', '--variant', 'B', '--position', '1,1']) == EXIT_USAGE


def test_tables_output_must_be_a_directory(capsys, tmp_path):
    assert main(['tables', '--n', '4', '--output', str(tmp_path / 'missing')]) == EXIT_USAGE


def test_internal_errors_are_not_usage_errors(capsys, profile, monkeypatch):
    def broken(*args, **kwargs):
        raise ValueError('Base-case table for n=4 lacks 0,0,0,1')

    monkeypatch.setattr('oooooob.cli.run_profile', broken)
    with pytest.raises(ValueError):
        main(['verify', '--lemma', 'c_345', '--config', profile])


def test_conflicting_entry_fails(capsys, profile, monkeypatch):
    def conflict(*args, **kwargs):
        raise ConflictingEntryError('1,1 already solved as N')

    monkeypatch.setattr('oooooob.cli.run_profile', conflict)
    assert main(['verify', '--lemma', 'c_345', '--config', profile]) == EXIT_FAIL
