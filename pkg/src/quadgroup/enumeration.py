"""Todd-Coxeter coset enumeration over finitely presented groups.

Two strategies share one compiled core: a relator-driven loop (scan and
fill every relator at every live coset, then fill the row) and a
definition-driven loop (deduction stack, relator rotations grouped by
leading letter). Coincidences are processed immediately with a
path-compressed union-find and column transfer. Generators with an
explicit square relator occupy a single table column.

The hot loops run under numba on flat int32 arrays; the Python wrapper
owns growth, memory caps and the optional lookahead-plus-compaction pass.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .presentation import Presentation

# status codes returned by the compiled core
_CLOSED, _NEED_SPACE, _LIMIT = 0, 1, 2

# counter slots
_NEXT, _NALIVE, _DEFINED, _ALPHA, _STACK, _DIRTY, _SUBW = range(7)


@njit(cache=True, inline="always")
def _rep(p, k):
    r = k
    while p[r] != r:
        r = p[r]
    while p[k] != r:
        nxt = p[k]
        p[k] = r
        k = nxt
    return r


@njit(cache=True)
def _merge(p, q, qtail, k, lam, counters):
    a = _rep(p, k)
    b = _rep(p, lam)
    if a == b:
        return qtail
    if a > b:
        a, b = b, a
    p[b] = a
    counters[_NALIVE] -= 1
    q[qtail] = b
    return qtail + 1


@njit(cache=True, inline="always")
def _push(stack, counters, alpha, x):
    t = counters[_STACK]
    if t >= stack.shape[0]:
        # overflow: mark for a full rescan once the stack drains
        counters[_DIRTY] = 1
        return
    stack[t, 0] = alpha
    stack[t, 1] = x
    counters[_STACK] = t + 1


@njit(cache=True)
def _coincidence(table, p, invcol, q, stack, counters, use_stack, alpha, beta):
    qhead = 0
    qtail = _merge(p, q, 0, alpha, beta, counters)
    while qhead < qtail:
        gamma = q[qhead]
        qhead += 1
        for x in range(table.shape[1]):
            delta = table[gamma, x]
            if delta < 0:
                continue
            table[delta, invcol[x]] = -1
            mu = _rep(p, gamma)
            nu = _rep(p, delta)
            if table[mu, x] >= 0:
                qtail = _merge(p, q, qtail, nu, table[mu, x], counters)
            elif table[nu, invcol[x]] >= 0:
                qtail = _merge(p, q, qtail, mu, table[nu, invcol[x]], counters)
            else:
                table[mu, x] = nu
                table[nu, invcol[x]] = mu
                if use_stack:
                    _push(stack, counters, mu, x)
                    _push(stack, counters, nu, invcol[x])


@njit(cache=True, inline="always")
def _scan(table, p, invcol, q, stack, counters, use_stack,
          cols, lo, hi, alpha, max_rows, fill):
    """Trace cols[lo:hi] as a cycle at alpha. With fill, define cosets to
    close gaps; without, only width-1 gaps are filled (deductions)."""
    f = alpha
    i = lo
    b = alpha
    j = hi - 1
    while True:
        while i <= j and table[f, cols[i]] >= 0:
            f = table[f, cols[i]]
            i += 1
        if i > j:
            if f != b:
                _coincidence(table, p, invcol, q, stack, counters, use_stack, f, b)
            return _CLOSED
        while j >= i and table[b, invcol[cols[j]]] >= 0:
            b = table[b, invcol[cols[j]]]
            j -= 1
        if j < i:
            _coincidence(table, p, invcol, q, stack, counters, use_stack, f, b)
            return _CLOSED
        if j == i:
            table[f, cols[i]] = b
            table[b, invcol[cols[i]]] = f
            if use_stack:
                _push(stack, counters, f, cols[i])
                _push(stack, counters, b, invcol[cols[i]])
            return _CLOSED
        if not fill:
            return _CLOSED
        nxt = counters[_NEXT]
        if nxt >= max_rows:
            return _LIMIT
        if nxt >= table.shape[0]:
            return _NEED_SPACE
        table[f, cols[i]] = nxt
        table[nxt, invcol[cols[i]]] = f
        p[nxt] = nxt
        counters[_NEXT] = nxt + 1
        counters[_NALIVE] += 1
        counters[_DEFINED] += 1
        if use_stack:
            _push(stack, counters, f, cols[i])
            _push(stack, counters, nxt, invcol[cols[i]])


@njit(cache=True)
def _fill_subgroup(table, p, invcol, q, stack, counters, use_stack,
                   subcols, substarts, max_rows):
    while counters[_SUBW] < substarts.shape[0] - 1:
        w = counters[_SUBW]
        res = _scan(table, p, invcol, q, stack, counters, use_stack,
                    subcols, substarts[w], substarts[w + 1], 0, max_rows, True)
        if res != _CLOSED:
            return res
        counters[_SUBW] = w + 1
    return _CLOSED


@njit(cache=True)
def _hlt_loop(table, p, invcol, q, stack, counters, relcols, relstarts, max_rows):
    alpha = counters[_ALPHA]
    nrels = relstarts.shape[0] - 1
    while alpha < counters[_NEXT]:
        if p[alpha] == alpha:
            for r in range(nrels):
                res = _scan(table, p, invcol, q, stack, counters, False,
                            relcols, relstarts[r], relstarts[r + 1],
                            alpha, max_rows, True)
                if res != _CLOSED:
                    counters[_ALPHA] = alpha
                    return res
                if p[alpha] != alpha:
                    break
            if p[alpha] == alpha:
                for x in range(table.shape[1]):
                    if table[alpha, x] < 0:
                        nxt = counters[_NEXT]
                        if nxt >= max_rows:
                            counters[_ALPHA] = alpha
                            return _LIMIT
                        if nxt >= table.shape[0]:
                            counters[_ALPHA] = alpha
                            return _NEED_SPACE
                        table[alpha, x] = nxt
                        table[nxt, invcol[x]] = alpha
                        p[nxt] = nxt
                        counters[_NEXT] = nxt + 1
                        counters[_NALIVE] += 1
                        counters[_DEFINED] += 1
        alpha += 1
    counters[_ALPHA] = alpha
    return _CLOSED


@njit(cache=True, inline="always")
def _scan4(table, p, invcol, q, stack, counters, a, x, g):
    """Two-ended scan of the word (x g x g) at a, single-column letters
    only; identical outcome to the generic scan, minus the indirection."""
    f = a
    i = 0
    while i <= 3:
        c = x if (i & 1) == 0 else g
        ff = table[f, c]
        if ff < 0:
            break
        f = ff
        i += 1
    if i > 3:
        if f != a:
            _coincidence(table, p, invcol, q, stack, counters, True, f, a)
        return
    b = a
    j = 3
    while j >= i:
        c = x if (j & 1) == 0 else g
        bb = table[b, c]
        if bb < 0:
            break
        b = bb
        j -= 1
    if j < i:
        _coincidence(table, p, invcol, q, stack, counters, True, f, b)
    elif j == i:
        c = x if (i & 1) == 0 else g
        table[f, c] = b
        table[b, c] = f
        _push(stack, counters, f, c)
        _push(stack, counters, b, c)


@njit(cache=True)
def _felsch_loop(table, p, invcol, q, stack, counters,
                 relcols, relstarts, rotcols, rotstarts,
                 groupptr, groupwords, fpart, fptr, max_rows):
    nrels = relstarts.shape[0] - 1
    cand = np.empty(table.shape[1], np.int32)
    while True:
        while counters[_STACK] > 0 or counters[_DIRTY] == 1:
            while counters[_STACK] > 0:
                counters[_STACK] -= 1
                t = counters[_STACK]
                a = stack[t, 0]
                x = stack[t, 1]
                if p[a] != a:
                    continue
                # phase 1: filter partners with any defined neighbour and
                # warm their next rows with independent loads; a word whose
                # cycle edges are all undefined scans to nothing, and any
                # edge set later re-queues the cycle through its own push
                bet = table[a, x]
                ncand = 0
                if bet >= 0:
                    warm = 0
                    for fi in range(fptr[x], fptr[x + 1]):
                        g = fpart[fi]
                        gam = table[bet, g]
                        dlt = table[a, g]
                        if gam >= 0 or dlt >= 0:
                            cand[ncand] = g
                            ncand += 1
                            if gam >= 0:
                                warm += table[gam, x]
                            if dlt >= 0:
                                warm += table[dlt, x]
                    counters[7] = warm
                else:
                    for fi in range(fptr[x], fptr[x + 1]):
                        cand[ncand] = fpart[fi]
                        ncand += 1
                for t in range(ncand):
                    _scan4(table, p, invcol, q, stack, counters, a, x,
                           cand[t])
                    if p[a] != a:
                        break
                if p[a] != a:
                    continue
                for wi in range(groupptr[x], groupptr[x + 1]):
                    w = groupwords[wi]
                    _scan(table, p, invcol, q, stack, counters, True,
                          rotcols, rotstarts[w], rotstarts[w + 1],
                          a, max_rows, False)
                    if p[a] != a:
                        break
            if counters[_DIRTY] == 1:
                counters[_DIRTY] = 0
                for beta in range(counters[_NEXT]):
                    if p[beta] != beta:
                        continue
                    for r in range(nrels):
                        _scan(table, p, invcol, q, stack, counters, True,
                              relcols, relstarts[r], relstarts[r + 1],
                              beta, max_rows, False)
                        if p[beta] != beta:
                            break
        # next undefined entry, from the saved scan position
        alpha = counters[_ALPHA]
        found = False
        while alpha < counters[_NEXT]:
            if p[alpha] == alpha:
                for x in range(table.shape[1]):
                    if table[alpha, x] < 0:
                        found = True
                        break
                if found:
                    break
            alpha += 1
        counters[_ALPHA] = alpha
        if not found:
            return _CLOSED
        for x in range(table.shape[1]):
            if table[alpha, x] < 0:
                nxt = counters[_NEXT]
                if nxt >= max_rows:
                    return _LIMIT
                if nxt >= table.shape[0]:
                    return _NEED_SPACE
                table[alpha, x] = nxt
                table[nxt, invcol[x]] = alpha
                p[nxt] = nxt
                counters[_NEXT] = nxt + 1
                counters[_NALIVE] += 1
                counters[_DEFINED] += 1
                _push(stack, counters, alpha, x)
                _push(stack, counters, nxt, invcol[x])
                break


@njit(cache=True)
def _lookahead_pass(table, p, invcol, q, stack, counters, relcols, relstarts):
    """Scan everything without defining; coincidences only."""
    nrels = relstarts.shape[0] - 1
    for beta in range(counters[_NEXT]):
        if p[beta] != beta:
            continue
        for r in range(nrels):
            _scan(table, p, invcol, q, stack, counters, False,
                  relcols, relstarts[r], relstarts[r + 1],
                  beta, table.shape[0], False)
            if p[beta] != beta:
                break


@njit(cache=True)
def _compact(table, p, counters):
    """Renumber live cosets densely; resets the scan position to 0."""
    n = counters[_NEXT]
    newidx = np.full(n, -1, np.int32)
    c = 0
    for i in range(n):
        if p[i] == i:
            newidx[i] = c
            c += 1
    for i in range(n):
        if p[i] != i:
            continue
        ni = newidx[i]
        for x in range(table.shape[1]):
            v = table[i, x]
            table[ni, x] = newidx[_rep(p, v)] if v >= 0 else -1
    for i in range(c, n):
        for x in range(table.shape[1]):
            table[i, x] = -1
    for i in range(c):
        p[i] = i
    counters[_NEXT] = c
    counters[_ALPHA] = 0
    return c


@njit(cache=True)
def _check_table(table, p, invcol, relcols, relstarts, subcols, substarts, nrows):
    """1 iff the table is complete and consistent on live rows, every
    relator closes everywhere, and the subgroup words fix coset 0."""
    ncols = table.shape[1]
    for a in range(nrows):
        if p[a] != a:
            continue
        for x in range(ncols):
            b = table[a, x]
            if b < 0 or p[b] != b or table[b, invcol[x]] != a:
                return 0
    for a in range(nrows):
        if p[a] != a:
            continue
        for r in range(relstarts.shape[0] - 1):
            c = a
            for i in range(relstarts[r], relstarts[r + 1]):
                c = table[c, relcols[i]]
            if c != a:
                return 0
    for w in range(substarts.shape[0] - 1):
        c = 0
        for i in range(substarts[w], substarts[w + 1]):
            c = table[c, subcols[i]]
        if c != 0:
            return 0
    return 1


@dataclass
class EnumerationConfig:
    strategy: str = "relator-driven"      # or "definition-driven"
    max_cosets: int = 1 << 26
    max_memory: int = 6 << 30             # bytes, table rows only
    lookahead: bool = False
    initial_rows: int = 1 << 14

    def __post_init__(self):
        if self.strategy not in ("relator-driven", "definition-driven"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.max_cosets < 2 or self.max_memory < 1 << 16:
            raise ValueError("caps are too small to hold even a trivial table")


@dataclass
class CosetTable:
    """Completed action of the generators on right cosets."""

    presentation: Presentation
    table: np.ndarray                      # (index, ncols) int32, row 0 = subgroup
    columns: dict                          # (gen index, exponent) -> column
    invcol: np.ndarray

    @property
    def index(self) -> int:
        return self.table.shape[0]

    def act(self, coset: int, gen: int, exp: int = 1) -> int:
        return int(self.table[coset, self.columns[(gen, exp)]])

    def trace(self, coset: int, word) -> int:
        for g, e in word:
            coset = self.act(coset, g, e)
        return coset


@dataclass
class Closed:
    index: int
    defined: int
    live: int
    seconds: float
    table: CosetTable

    status = "closed"


@dataclass
class LimitExceeded:
    defined: int
    live: int
    seconds: float
    max_cosets: int

    status = "limit-exceeded"
    index = None


def _columns(p: Presentation):
    """Assign table columns; involutive generators share one column for
    both exponents."""
    involutive = p.involutive_generators()
    columns = {}
    inv = []
    for g in range(p.ngens):
        c = len(inv)
        if g in involutive:
            columns[(g, 1)] = c
            columns[(g, -1)] = c
            inv.append(c)
        else:
            columns[(g, 1)] = c
            columns[(g, -1)] = c + 1
            inv.append(c + 1)
            inv.append(c)
    return columns, np.asarray(inv, dtype=np.int32)


def _flatten(words, columns):
    cols, starts = [], [0]
    for w in words:
        cols.extend(columns[(g, e)] for g, e in w)
        starts.append(len(cols))
    return (np.asarray(cols, dtype=np.int32),
            np.asarray(starts, dtype=np.int32))


def _rotation_groups(relators, columns, invcol, ncols):
    """Cyclic rotations of each relator, grouped by leading column, for
    deduction processing. Inverse-word rotations are omitted: every new
    table entry pushes both directed edges, so each cycle through an edge
    is reached from one endpoint or the other by a plain rotation.
    Squares of single-column generators scan vacuously (the table is kept
    symmetric) and are omitted too."""
    words = []
    seen = set()
    for rel in relators:
        base = [columns[(g, e)] for g, e in rel]
        if len(base) == 2 and base[0] == base[1] and invcol[base[0]] == base[0]:
            continue
        for s in range(len(base)):
            rot = tuple(base[s:] + base[:s])
            if rot not in seen:
                seen.add(rot)
                words.append(rot)
    # split off length-4 two-letter words over single-column generators
    # (commutator rotations, the bulk); the drain scans them unrolled
    fast = [[] for _ in range(ncols)]
    slow = []
    for w in words:
        if (len(w) == 4 and w[2] == w[0] and w[3] == w[1]
                and invcol[w[0]] == w[0] and invcol[w[1]] == w[1]):
            fast[w[0]].append(w[1])
        else:
            slow.append(w)
    fptr = [0]
    fpart = []
    for g in fast:
        fpart.extend(g)
        fptr.append(len(fpart))
    rotcols, rotstarts = _flatten_plain(slow)
    groups = [[] for _ in range(ncols)]
    for wi, w in enumerate(slow):
        groups[w[0]].append(wi)
    ptr = [0]
    flat = []
    for g in groups:
        flat.extend(g)
        ptr.append(len(flat))
    return (rotcols, rotstarts,
            np.asarray(ptr, dtype=np.int32),
            np.asarray(flat, dtype=np.int32),
            np.asarray(fpart, dtype=np.int32),
            np.asarray(fptr, dtype=np.int32))


def _flatten_plain(words):
    cols, starts = [], [0]
    for w in words:
        cols.extend(w)
        starts.append(len(cols))
    return (np.asarray(cols, dtype=np.int32),
            np.asarray(starts, dtype=np.int32))


def enumerate_cosets(p: Presentation, subgroup=(), config: EnumerationConfig | None = None):
    """Enumerate cosets of the subgroup generated by the given words.

    Returns Closed (with the completed, consistency-checked table) or
    LimitExceeded; never reports a finite index that was not verified.
    """
    cfg = config or EnumerationConfig()
    start = time.perf_counter()

    columns, invcol = _columns(p)
    ncols = int(invcol.shape[0])
    relcols, relstarts = _flatten(p.relators, columns)
    subcols, substarts = _flatten(list(subgroup), columns)
    felsch = cfg.strategy == "definition-driven"
    if felsch:
        (rotcols, rotstarts, groupptr, groupwords,
         fpart, fptr) = _rotation_groups(p.relators, columns, invcol, ncols)

    row_bytes = 4 * (ncols + 2)
    mem_rows = max(int(cfg.max_memory // row_bytes), 1024)
    hard_cap = min(cfg.max_cosets, mem_rows)
    cap = min(max(cfg.initial_rows, 16), hard_cap)

    table = np.full((cap, ncols), -1, dtype=np.int32)
    pvec = np.zeros(cap, dtype=np.int32)
    qbuf = np.zeros(cap, dtype=np.int32)
    stack = (np.zeros((min(4 * cap, 1 << 22), 2), dtype=np.int32)
             if felsch else np.zeros((1, 2), dtype=np.int32))
    counters = np.zeros(8, dtype=np.int64)
    counters[_NEXT] = counters[_NALIVE] = counters[_DEFINED] = 1

    defined_at_last_lookahead = -1
    while True:
        res = _fill_subgroup(table, pvec, invcol, qbuf, stack, counters,
                             felsch, subcols, substarts, hard_cap)
        if res == _CLOSED:
            if felsch:
                res = _felsch_loop(table, pvec, invcol, qbuf, stack, counters,
                                   relcols, relstarts, rotcols, rotstarts,
                                   groupptr, groupwords, fpart, fptr, hard_cap)
            else:
                res = _hlt_loop(table, pvec, invcol, qbuf, stack, counters,
                                relcols, relstarts, hard_cap)
        if res == _CLOSED:
            break
        if res == _NEED_SPACE:
            newcap = min(2 * cap, hard_cap)
            if newcap > cap:
                grown = np.full((newcap, ncols), -1, dtype=np.int32)
                grown[:cap] = table
                table = grown
                pvec = np.concatenate(
                    [pvec, np.zeros(newcap - cap, dtype=np.int32)])
                qbuf = np.zeros(newcap, dtype=np.int32)
                cap = newcap
                continue
            res = _LIMIT
        if res == _LIMIT:
            if (cfg.lookahead and not felsch
                    and counters[_DEFINED] > defined_at_last_lookahead):
                defined_at_last_lookahead = int(counters[_DEFINED])
                _lookahead_pass(table, pvec, invcol, qbuf, stack, counters,
                                relcols, relstarts)
                live = _compact(table, pvec, counters)
                if live < hard_cap:
                    continue
            return LimitExceeded(
                defined=int(counters[_DEFINED]),
                live=int(counters[_NALIVE]),
                seconds=time.perf_counter() - start,
                max_cosets=cfg.max_cosets,
            )

    live = _compact(table, pvec, counters)
    table = np.ascontiguousarray(table[:live])
    pvec = pvec[:live]
    if not _check_table(table, pvec, invcol, relcols, relstarts,
                        subcols, substarts, live):
        raise RuntimeError("completed coset table failed consistency check")
    result = CosetTable(presentation=p, table=table, columns=columns, invcol=invcol)
    return Closed(
        index=live,
        defined=int(counters[_DEFINED]),
        live=live,
        seconds=time.perf_counter() - start,
        table=result,
    )


def verify_table(ct: CosetTable, subgroup=()) -> bool:
    """Re-check a completed table: completeness, inverse consistency,
    every relator closing at every coset, subgroup words fixing coset 0."""
    p = ct.presentation
    columns, invcol = ct.columns, ct.invcol
    relcols, relstarts = _flatten(p.relators, columns)
    subcols, substarts = _flatten(list(subgroup), columns)
    pvec = np.arange(ct.table.shape[0], dtype=np.int32)
    return bool(_check_table(ct.table, pvec, invcol, relcols, relstarts,
                             subcols, substarts, ct.table.shape[0]))
