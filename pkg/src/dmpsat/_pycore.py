"""Pure-Python kernels: canonical labeling, orderly canonicity, path solver.

Mirrors the compiled extension ``dmpsat._core``; the two must stay
behaviorally identical (see tests/test_core_parity.py).  Graphs cross this
boundary as ``(n, masks)`` where masks is a sequence of per-vertex adjacency
bitmasks.

Word convention: the binary word of a labeled graph is the adjacency upper
triangle read column-major, i.e. bits (0,1), (0,2), (1,2), (0,3), ... --
the same bit order graph6 uses.
"""

from __future__ import annotations

BACKEND = "python"


# ---------------------------------------------------------------------------
# equitable partition refinement
# ---------------------------------------------------------------------------


def _equitable(n, masks, part):
    """Coarsest equitable refinement of an ordered partition.

    Cells are split by neighbor counts into a splitter cell; fragments are
    ordered by ascending count, so the resulting cell order depends only on
    isomorphism-invariant data.  Vertices inside a cell stay sorted.
    """
    part = [list(c) for c in part]
    changed = True
    while changed:
        changed = False
        for i in range(len(part)):
            wmask = 0
            for v in part[i]:
                wmask |= 1 << v
            newpart = []
            for cell in part:
                if len(cell) == 1:
                    newpart.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((masks[v] & wmask).bit_count(), []).append(v)
                if len(groups) > 1:
                    changed = True
                for c in sorted(groups):
                    newpart.append(groups[c])
            part = newpart
            if changed:
                break
    return part


def _tail_uniform(masks, cells):
    """True if every ordering of the given (equitable) cells yields one word.

    Requires each cell to induce a clique or an independent set and every
    cell pair to be completely joined or completely disjoint.  Adjacency to
    the already-fixed singleton prefix is uniform by equitability.
    """
    cms = []
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        cms.append(m)
    for cell, cm in zip(cells, cms):
        inner = masks[cell[0]] & cm
        if inner != 0 and inner != cm ^ (1 << cell[0]):
            return False
    for i in range(len(cells)):
        v0 = cells[i][0]
        for j in range(i + 1, len(cells)):
            x = masks[v0] & cms[j]
            if x != 0 and x != cms[j]:
                return False
    return True


# ---------------------------------------------------------------------------
# canonical labeling (minimum word over refinement-consistent relabelings)
# ---------------------------------------------------------------------------


def min_canon_perm(n, masks):
    """Permutation sigma (position -> vertex) whose relabeling minimizes the word.

    The minimum is taken over all relabelings consistent with the equitable
    degree partition, searched by individualization-refinement with prefix
    pruning; the result is a canonical labeling (equal words iff isomorphic).
    """
    if n == 1:
        return (0,)
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(masks[v].bit_count(), []).append(v)
    part0 = _equitable(n, masks, [by_deg[d] for d in sorted(by_deg)])

    best_bits: list[int] | None = None
    best_perm: list[int] | None = None

    def emit(order, bits, col0, col1, better):
        """Append word bits for columns col0..col1-1 of ``order``.

        Compares against the incumbent unless already strictly better;
        returns (better, pruned).
        """
        nonlocal best_bits
        for c in range(col0, col1):
            mc = masks[order[c]]
            for r in range(c):
                b = mc >> order[r] & 1
                if not better and best_bits is not None:
                    bb = best_bits[len(bits)]
                    if b > bb:
                        return better, True
                    if b < bb:
                        better = True
                bits.append(b)
        return better, False

    def dfs(part, bits, prefix, better):
        nonlocal best_bits, best_perm
        s = 0
        while s < len(part) and len(part[s]) == 1:
            s += 1
        fixed = [part[i][0] for i in range(s)]
        if s > prefix:
            bits = bits.copy()
            better, pruned = emit(fixed, bits, max(prefix, 1), s, better)
            if pruned:
                return
        if s == len(part):
            if best_bits is None or better:
                best_bits, best_perm = bits, fixed
            return
        tail = part[s:]
        if _tail_uniform(masks, tail):
            perm = fixed + [v for cell in tail for v in cell]
            bits = bits.copy()
            better, pruned = emit(perm, bits, max(s, 1), n, better)
            if not pruned and (best_bits is None or better):
                best_bits, best_perm = bits, perm
            return
        cell = part[s]
        for v in cell:
            rest = [w for w in cell if w != v]
            child = _equitable(n, masks, part[:s] + [[v], rest] + part[s + 1:])
            dfs(child, bits, s, better)

    dfs(part0, [], 0, False)
    assert best_perm is not None
    return tuple(best_perm)


# ---------------------------------------------------------------------------
# orderly canonicity (maximum word over all relabelings)
# ---------------------------------------------------------------------------


def is_max_word(n, masks):
    """True iff the identity word is maximal over every relabeling.

    Used by the orderly generator: deleting the last-position edge of a
    max-word-canonical graph leaves a max-word-canonical graph, so edge
    augmentation past the last edge plus this test enumerates each
    isomorphism class exactly once.
    """
    if n == 1:
        return True
    target = []
    for j in range(1, n):
        col = masks[j]
        target.extend(col >> i & 1 for i in range(j))
    full = (1 << n) - 1
    placed = [0] * n

    def forced_tail(p, used, base):
        """If the unplaced vertices are mutually interchangeable, finish here.

        Returns +1 (a better word exists), -1 (subtree settled, no better),
        or 0 (not applicable).
        """
        rem_mask = full & ~used
        rm0 = -1
        um = rem_mask
        while um:
            low = um & -um
            v = low.bit_length() - 1
            um ^= low
            r = masks[v] & used
            if rm0 < 0:
                rm0 = r
            elif r != rm0:
                return 0
        kind = None
        um = rem_mask
        while um:
            low = um & -um
            v = low.bit_length() - 1
            um ^= low
            inner = masks[v] & rem_mask
            if inner == 0:
                k = 0
            elif inner == rem_mask ^ (1 << v):
                k = 1
            else:
                return 0
            if kind is not None and k != kind:
                return 0
            kind = k
        seq = placed[:p]
        um = rem_mask
        while um:
            low = um & -um
            seq.append(low.bit_length() - 1)
            um ^= low
        idx = base
        for c in range(p, n):
            mc = masks[seq[c]]
            for r in range(c):
                b = mc >> seq[r] & 1
                if b != target[idx]:
                    return 1 if b > target[idx] else -1
                idx += 1
        return -1

    def rec(p, used, base):
        """True iff some completion beats the target word."""
        if p == n:
            return False
        ft = forced_tail(p, used, base)
        if ft:
            return ft > 0
        tchunk = 0
        for r in range(p):
            tchunk = tchunk << 1 | target[base + r]
        cands = []
        um = full & ~used
        while um:
            low = um & -um
            v = low.bit_length() - 1
            um ^= low
            ch = 0
            mv = masks[v]
            for r in range(p):
                ch = ch << 1 | (mv >> placed[r] & 1)
            cands.append((ch, v))
        cands.sort(key=lambda t: (-t[0], t[1]))
        for ch, v in cands:
            if ch > tchunk:
                return True
            if ch < tchunk:
                break
            placed[p] = v
            if rec(p + 1, used | 1 << v, base + p):
                return True
        return False

    return not rec(0, 0, 0)


# ---------------------------------------------------------------------------
# degree-monotone path solver
# ---------------------------------------------------------------------------


def mp_solve(n, masks, target, direction=1):
    """Longest path with non-decreasing degrees (direction=-1: non-increasing).

    Exact when ``target > n``.  Otherwise the search stops at the first path
    reaching ``target`` vertices and returns that path, pruning branches that
    cannot reach the target; the returned length is then exact only if it is
    below the target.  Returns (length, path).
    """
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    deg = [m.bit_count() for m in masks]
    key = deg if direction >= 0 else [-d for d in deg]
    ge = [0] * n
    for v in range(n):
        m = 0
        for w in range(n):
            if key[w] >= key[v]:
                m |= 1 << w
        ge[v] = m
    starts = sorted(range(n), key=lambda v: (key[v], v))
    best_len = 0
    best_path: tuple[int, ...] = ()
    path: list[int] = []
    exact = target > n

    def extend(v, used):
        nonlocal best_len, best_path
        path.append(v)
        used |= 1 << v
        length = len(path)
        if length > best_len:
            best_len = length
            best_path = tuple(path)
            if length >= target:
                path.pop()
                return True
        elig = ge[v] & ~used
        cap = best_len if exact else target - 1
        if length + elig.bit_count() > cap:
            nbrs = masks[v] & elig
            while nbrs:
                low = nbrs & -nbrs
                w = low.bit_length() - 1
                nbrs ^= low
                if extend(w, used):
                    path.pop()
                    return True
        path.pop()
        return False

    for v in starts:
        if extend(v, 0):
            break
    return best_len, best_path
