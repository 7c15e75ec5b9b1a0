"""Hot loops shared by the automaton and preaction layers.

Each kernel has a numba version and a pure-numpy version with identical
results.  The numba path is used when numba imports and the environment
variable ``PREACT_DISABLE_NUMBA`` is unset or ``0``.
"""
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and os.environ.get("PREACT_DISABLE_NUMBA", "0") in ("", "0")

IDENTITY, AXIOM_B, AXIOM_C = 0, 1, 2


def _jit(func):
    if numba is None:
        return func
    return numba.njit(cache=True)(func)


# -- batch runs ---------------------------------------------------------------

def run_batch_numpy(table, starts, codes, lengths):
    state = starts.astype(np.int32).copy()
    for j in range(codes.shape[1]):
        live = lengths > j
        if not live.any():
            break
        state[live] = table[state[live], codes[live, j]]
    return state


def _run_batch_loop(table, starts, codes, lengths):
    out = np.empty(starts.shape[0], dtype=np.int32)
    for i in range(starts.shape[0]):
        s = starts[i]
        for j in range(lengths[i]):
            s = table[s, codes[i, j]]
        out[i] = s
    return out


run_batch_numba = _jit(_run_batch_loop)


# -- Moore partition refinement ------------------------------------------------

def _renumber(ids):
    seen = {}
    out = np.empty(len(ids), dtype=np.int32)
    for i, v in enumerate(ids.tolist()):
        out[i] = seen.setdefault(v, len(seen))
    return out


def moore_blocks_numpy(table, accepting):
    blocks = _renumber(accepting.astype(np.int32))
    while True:
        signature = np.column_stack([blocks, blocks[table]])
        _, inverse = np.unique(signature, axis=0, return_inverse=True)
        refined = _renumber(inverse.reshape(-1))
        if refined.max(initial=-1) == blocks.max(initial=-1):
            return refined
        blocks = refined


def _moore_loop(table, accepting):
    n, k = table.shape
    blocks = np.zeros(n, dtype=np.int32)
    count = 1
    for s in range(n):
        if accepting[s] != accepting[0]:
            blocks[s] = 1
            count = 2
    while True:
        refined = np.full(n, -1, dtype=np.int32)
        new_count = 0
        for s in range(n):
            if refined[s] != -1:
                continue
            refined[s] = new_count
            for t in range(s + 1, n):
                if refined[t] != -1 or blocks[t] != blocks[s]:
                    continue
                same = True
                for a in range(k):
                    if blocks[table[s, a]] != blocks[table[t, a]]:
                        same = False
                        break
                if same:
                    refined[t] = new_count
            new_count += 1
        if new_count == count:
            return refined
        blocks = refined
        count = new_count


moore_blocks_numba = _jit(_moore_loop)


# -- exhaustive axiom scan -----------------------------------------------------

def _offsets(k, max_len):
    off = np.zeros(max_len + 2, dtype=np.int64)
    for length in range(1, max_len + 2):
        off[length] = off[length - 1] + k ** (length - 1)
    return off


def _pair_indices(k, max_len):
    """Shortlex indices of every (u, v, uv) with |uv| <= max_len."""
    off = _offsets(k, max_len)
    us, vs, uvs = [], [], []
    for lu in range(max_len + 1):
        for lv in range(max_len + 1 - lu):
            ru = np.arange(k ** lu, dtype=np.int64)
            rv = np.arange(k ** lv, dtype=np.int64)
            gu, gv = np.meshgrid(ru, rv, indexing="ij")
            us.append((off[lu] + gu).ravel())
            vs.append((off[lv] + gv).ravel())
            uvs.append((off[lu + lv] + gu * k ** lv + gv).ravel())
    return np.concatenate(us), np.concatenate(vs), np.concatenate(uvs)


def axiom_scan_numpy(evaltab, k, max_len):
    """Rows ``(x, u_index, v_index, axiom)`` of every violated instance."""
    nx = evaltab.shape[0]
    rows = []
    xs = np.arange(nx)
    bad_identity = evaltab[:, 0] != xs
    for x in xs[bad_identity]:
        rows.append(np.array([[x, 0, 0, IDENTITY]], dtype=np.int64))
    iu, iv, iuv = _pair_indices(k, max_len)
    for x in range(nx):
        xu = evaltab[x, iu]
        xuv = evaltab[x, iuv]
        safe = np.where(xu >= 0, xu, 0)
        xu_v = np.where(xu >= 0, evaltab[safe, iv], -1)
        b = (xu >= 0) & (xu_v >= 0) & (xuv != xu_v)
        c = (xu >= 0) & (xuv >= 0) & (xu_v != xuv)
        for mask, code in ((b, AXIOM_B), (c, AXIOM_C)):
            if mask.any():
                sel = np.nonzero(mask)[0]
                block = np.empty((len(sel), 4), dtype=np.int64)
                block[:, 0] = x
                block[:, 1] = iu[sel]
                block[:, 2] = iv[sel]
                block[:, 3] = code
                rows.append(block)
    if not rows:
        return np.empty((0, 4), dtype=np.int64)
    return np.concatenate(rows)


def _axiom_loop(evaltab, k, max_len, off, capacity):
    nx = evaltab.shape[0]
    out = np.empty((capacity, 4), dtype=np.int64)
    count = 0
    for x in range(nx):
        if evaltab[x, 0] != x:
            out[count, 0] = x
            out[count, 1] = 0
            out[count, 2] = 0
            out[count, 3] = 0
            count += 1
    for x in range(nx):
        for lu in range(max_len + 1):
            for lv in range(max_len + 1 - lu):
                kv = k ** lv
                for ru in range(k ** lu):
                    iu = off[lu] + ru
                    xu = evaltab[x, iu]
                    if xu < 0:
                        continue
                    for rv in range(kv):
                        iv = off[lv] + rv
                        xuv = evaltab[x, off[lu + lv] + ru * kv + rv]
                        xu_v = evaltab[xu, iv]
                        if xu_v >= 0 and xuv != xu_v:
                            out[count, 0] = x
                            out[count, 1] = iu
                            out[count, 2] = iv
                            out[count, 3] = 1
                            count += 1
                        if xuv >= 0 and xu_v != xuv:
                            out[count, 0] = x
                            out[count, 1] = iu
                            out[count, 2] = iv
                            out[count, 3] = 2
                            count += 1
    return out[:count]


_axiom_loop_jit = _jit(_axiom_loop)


def axiom_scan_numba(evaltab, k, max_len):
    off = _offsets(k, max_len)
    pairs = sum((length + 1) * k ** length for length in range(max_len + 1))
    capacity = evaltab.shape[0] * (1 + 2 * pairs)
    table = np.ascontiguousarray(evaltab, dtype=np.int64)
    return _axiom_loop_jit(table, k, max_len, off, capacity)


if USE_NUMBA:
    run_batch = run_batch_numba
    moore_blocks = moore_blocks_numba
    axiom_scan = axiom_scan_numba
else:
    run_batch = run_batch_numpy
    moore_blocks = moore_blocks_numpy
    axiom_scan = axiom_scan_numpy
