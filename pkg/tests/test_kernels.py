import os
import subprocess
import sys

import numpy as np
from hypothesis import given, settings, strategies as st

from preact import _kernels
from preact.preaction import z_machine
from preact.words import Alphabet

from corpus import ClampedLetterwise, mod3_restriction


@st.composite
def dfas(draw, max_states=8, k=2):
    n = draw(st.integers(1, max_states))
    table = np.array(draw(st.lists(st.lists(st.integers(0, n - 1), min_size=k, max_size=k),
                                   min_size=n, max_size=n)), dtype=np.int32)
    accepting = np.array(draw(st.lists(st.booleans(), min_size=n, max_size=n)))
    return table, accepting


@settings(max_examples=60, deadline=None)
@given(dfas(), st.integers(0, 2**32 - 1))
def test_run_batch_paths_agree(dfa, seed):
    table, _ = dfa
    rng = np.random.default_rng(seed)
    m = 50
    lengths = rng.integers(0, 9, size=m).astype(np.int32)
    codes = rng.integers(0, 2, size=(m, 9)).astype(np.int32)
    starts = rng.integers(0, table.shape[0], size=m).astype(np.int32)
    expected = _kernels.run_batch_numpy(table, starts, codes, lengths)
    assert np.array_equal(_kernels.run_batch_numba(table, starts, codes, lengths), expected)
    for i in range(m):
        s = starts[i]
        for j in range(lengths[i]):
            s = table[s, codes[i, j]]
        assert expected[i] == s


@settings(max_examples=80, deadline=None)
@given(dfas())
def test_moore_paths_agree(dfa):
    table, accepting = dfa
    blocks = _kernels.moore_blocks_numpy(table, accepting)
    assert np.array_equal(_kernels.moore_blocks_numba(table, accepting), blocks)
    # first-occurrence numbering
    seen = []
    for b in blocks.tolist():
        if b not in seen:
            seen.append(b)
    assert seen == list(range(len(seen)))
    # a stable partition: equal blocks have equal acceptance and successors' blocks
    for s in range(len(blocks)):
        for t in range(len(blocks)):
            if blocks[s] == blocks[t]:
                assert accepting[s] == accepting[t]
                assert all(blocks[table[s, a]] == blocks[table[t, a]] for a in range(table.shape[1]))


def _rows(a):
    return sorted(map(tuple, a.tolist()))


def test_axiom_scan_paths_agree():
    words = Alphabet("ab").words_upto(6)
    for m in (z_machine(), mod3_restriction(), ClampedLetterwise()):
        tab = m.eval_table(words)
        assert _rows(_kernels.axiom_scan_numpy(tab, 2, 6)) == _rows(_kernels.axiom_scan_numba(tab, 2, 6))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_axiom_scan_on_random_tables(seed):
    rng = np.random.default_rng(seed)
    words = Alphabet("ab").words_upto(4)
    tab = rng.integers(-1, 3, size=(3, len(words))).astype(np.int64)
    tab[:, 0] = np.arange(3)
    assert _rows(_kernels.axiom_scan_numpy(tab, 2, 4)) == _rows(_kernels.axiom_scan_numba(tab, 2, 4))


def test_environment_flag_selects_numpy_path():
    code = ("from preact import _kernels, preaction; "
            "print(_kernels.USE_NUMBA, preaction.check_axioms(preaction.z_machine(), 6).passed)")
    env = dict(os.environ, PREACT_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "True"]
