# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import os
import subprocess
import sys

import pytest

from cospectra import report


tests_dir = os.path.dirname(os.path.abspath(__file__))
resources_dir = os.path.join(tests_dir, 'resources')


def run_cli(*args, cwd=resources_dir):
    cmd = (sys.executable, '-m', 'cospectra') + args
    return subprocess.run(cmd, cwd=cwd, stdout=subprocess.PIPE, stderr=subprocess.PIPE, universal_newlines=True, check=False)


@pytest.mark.parametrize('args, exp', [
    (('--g6=C~', ), 'J(1,2,3,4)\n'),
    (('--g6=A?', ), 'U(1,2)\n'),
    (('--cotree=1', ), '1\n'),
    (('--cotree=J(U(J(2,1)),3)', ), 'J(1,2,3)\n'),
    (('--edges=c4.txt', ), 'J(U(1,2),U(3,4))\n'),
    (('--edges=threshold.txt', ), 'J(5,U(1,2,J(3,4)))\n'),
])
def test_recognize(args, exp):
    proc = run_cli('recognize', *args)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == exp


def test_recognize_p4():
    proc = run_cli('recognize', '--edges=p4.txt')
    assert proc.returncode == 2
    assert proc.stdout == 'not a cograph: induced P4 1,2,3,4\n'


@pytest.mark.parametrize('args', [
    ('recognize', '--g6=A'),
    ('recognize', '--cotree=J(1,1)'),
    ('recognize', '--cotree=J(1,'),
    ('recognize', '--edges=self-loop.txt'),
    ('recognize', '--edges=missing.txt'),
    ('recognize', ),
    ('recognize', '--g6=A_', '--cotree=J(1,2)'),
    ('synth', '--cotree=J(1,2)', '--lambda=0'),
    ('fuzz', '--trials=0'),
    ('frobnicate', ),
])
def test_input_errors(args):
    assert run_cli(*args).returncode == 3


@pytest.mark.parametrize('args, n, lam', [
    (('--cotree=J(1,2)', ), 2, 1.0),
    (('--edges=c4.txt', '--lambda=3'), 4, 3.0),
    (('--edges=threshold.txt', '--lambda=-2.5'), 5, -2.5),
])
def test_synth(args, n, lam, tmpdir):
    out = os.path.join(str(tmpdir), 'report.json')
    proc = run_cli('synth', f'--out={out}', *args)
    assert proc.returncode == 0, proc.stderr

    with open(out, 'r') as f:
        run = report.loads(f.read())
    assert run.passed
    assert run.matrix.n == n
    assert run.lam == lam

    proc = run_cli('check', out)
    assert proc.returncode == 0, proc.stdout
    assert all(line.endswith('pass') or ': pass (' in line for line in proc.stdout.splitlines())


def test_synth_is_deterministic(tmpdir):
    texts = []
    for i in range(2):
        out = os.path.join(str(tmpdir), f'report{i}.json')
        assert run_cli('synth', '--edges=threshold.txt', '--lambda=2', f'--out={out}').returncode == 0
        with open(out, 'r') as f:
            texts.append([line for line in f.read().splitlines() if not line.startswith(' "wall_time"')])
    assert texts[0] == texts[1]


def test_synth_stdout():
    proc = run_cli('synth', '--cotree=J(1,2)')
    assert proc.returncode == 0
    assert report.loads(proc.stdout).matrix.to_triples() == [[[1, 0, 0], [-1, 0, 0]], [[-1, 0, 0], [1, 0, 0]]]


def test_synth_p4():
    proc = run_cli('synth', '--edges=p4.txt')
    assert proc.returncode == 2
    assert '1,2,3,4' in proc.stdout


@pytest.mark.parametrize('args, returncode', [
    (('report-k2.json', ), 0),
    (('report-k2.json', '--g6=A_'), 0),
    (('report-k2.json', '--g6=A?'), 1),
    (('report-k2.json', '--cotree=J(1,2,3)'), 1),
    (('missing.json', ), 3),
    (('c4.txt', ), 3),
])
def test_check(args, returncode):
    assert run_cli('check', *args).returncode == returncode


@pytest.mark.parametrize('args, exp', [
    (('--cotree=J(1,2)', ), [0.0, 2.0]),
    (('--edges=c4.txt', '--lambda=3'), [0.0, 3.0, 3.0, 6.0]),
    (('--cotree=U(1,2,3)', ), [0.0, 0.0, 0.0]),
])
def test_eig(args, exp):
    proc = run_cli('eig', *args)
    assert proc.returncode == 0, proc.stderr
    lines = proc.stdout.splitlines()
    assert [float(line) for line in lines] == pytest.approx(exp, abs=1e-12)


@pytest.mark.parametrize('args, exp', [
    (('--n-max=1', '--trials=10', '--seed=0'), '10 passed, 0 failed (10 trials, n <= 1, seed 0)\n'),
    (('--n-max=12', '--trials=200', '--seed=42'), '200 passed, 0 failed (200 trials, n <= 12, seed 42)\n'),
    (('--n-max=12', '--trials=1000', '--seed=42'), '1000 passed, 0 failed (1000 trials, n <= 12, seed 42)\n'),
    (('--n-max=12', '--trials=200', '--seed=42', '--jobs=2'), '200 passed, 0 failed (200 trials, n <= 12, seed 42)\n'),
    (('--n-max=8', '--trials=50', '--seed=7', '--reduce', '--phase=prune+hoist'), '50 passed, 0 failed (50 trials, n <= 8, seed 7)\n'),
])
def test_fuzz(args, exp):
    proc = run_cli('fuzz', *args)
    assert proc.returncode == 0, proc.stdout
    assert proc.stdout == exp


def test_version():
    proc = run_cli('--version')
    assert proc.returncode == 0
