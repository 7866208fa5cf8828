"""Exact solver for the k-cop pursuit game on a digraph.

Rules: the cop player puts k pieces on vertices (several may share one),
then the robber picks a vertex knowing the cop placement.  Rounds alternate
with the cops moving first; in its move each piece may follow one out-arc
or stay put.  The cops win as soon as the robber stands on an occupied
vertex, whether after a cop move, after a robber move, or already at
placement.

A position is (cop multiset, robber vertex, side to move).  Cop multisets
are kept sorted, so positions are canonical.  The solver runs a backward
attractor over the full position space: a cop-to-move position is winning
when some successor is, a robber-to-move position when all successors are.
Each robber position carries a counter of its not-yet-winning successors so
the whole computation is linear in the number of transitions.  rank counts
optimal half-moves to capture: cops minimize it, the robber maximizes it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .digraph import Digraph
from .errors import InputError, StateBudgetExceeded

DEFAULT_STATE_BUDGET = 50_000_000

COPS = "cops"
ROBBER = "robber"


@dataclass(frozen=True, order=True)
class GamePosition:
    """One game state; cops is always stored sorted."""

    cops: tuple
    robber: int
    to_move: str

    def __post_init__(self):
        object.__setattr__(self, "cops", tuple(sorted(self.cops)))
        if self.to_move not in (COPS, ROBBER):
            raise InputError(f"to_move must be '{COPS}' or '{ROBBER}'")


def _check_position(d: Digraph, pos: GamePosition) -> None:
    if not pos.cops:
        raise InputError("at least one cop is required")
    for c in pos.cops:
        if not (0 <= c < d.n):
            raise InputError(f"cop vertex {c} is out of range for n={d.n}")
    if not (0 <= pos.robber < d.n):
        raise InputError(f"robber vertex {pos.robber} is out of range for n={d.n}")


def legal_moves(d: Digraph, pos: GamePosition) -> list[GamePosition]:
    """Canonical successor positions for the side to move, sorted.

    Cops move every piece independently along an out-arc or keep it; the
    robber does the same with its single piece.  Distinct option tuples that
    sort to the same multiset collapse to one successor.
    """
    _check_position(d, pos)
    if pos.to_move == COPS:
        opts = [(c,) + d.out_adj[c] for c in pos.cops]
        succ = sorted({tuple(sorted(t)) for t in product(*opts)})
        return [GamePosition(s, pos.robber, ROBBER) for s in succ]
    opts = sorted({pos.robber, *d.out_adj[pos.robber]})
    return [GamePosition(pos.cops, r, COPS) for r in opts]


class SolveResult:
    """Winner classification of every position of the (d, k) game."""

    def __init__(self, d, k, cop_sets, index, copsucc, win, rank):
        self._d = d
        self.k = k
        self._cop_sets = cop_sets
        self._index = index
        self._copsucc = copsucc
        self._win = win
        self._rank = rank
        self._best = {}

    @property
    def num_positions(self) -> int:
        return len(self._win)

    def _pid(self, pos: GamePosition) -> int:
        _check_position(self._d, pos)
        if len(pos.cops) != self.k:
            raise InputError(f"position has {len(pos.cops)} cops, expected {self.k}")
        ci = self._index[pos.cops]
        side = 0 if pos.to_move == COPS else 1
        return (ci * self._d.n + pos.robber) * 2 + side

    def win(self, pos: GamePosition) -> bool:
        """True when the cop side forces capture from this position."""
        return bool(self._win[self._pid(pos)])

    def rank(self, pos: GamePosition):
        """Optimal half-moves to capture, or None for robber-win positions."""
        pid = self._pid(pos)
        return self._rank[pid] if self._win[pid] else None

    def best_move(self, pos: GamePosition):
        """The successor a winning cop side should move to.

        Among the successors one rank below, ties break to the
        lexicographically smallest cop multiset.  None when the position is
        not a cop-to-move win or is already a capture.
        """
        pid = self._pid(pos)
        if pos.to_move != COPS or not self._win[pid] or self._rank[pid] == 0:
            return None
        cached = self._best.get(pid)
        if cached is not None:
            return cached
        n = self._d.n
        target = self._rank[pid] - 1
        r = pos.robber
        for si in self._copsucc[self._index[pos.cops]]:
            q = (si * n + r) * 2 + 1
            if self._win[q] and self._rank[q] == target:
                move = GamePosition(self._cop_sets[si], r, ROBBER)
                self._best[pid] = move
                return move
        raise RuntimeError("winning position has no rank-decreasing successor")

    def placements(self):
        """All cop multisets in lexicographic order."""
        return iter(self._cop_sets)

    def placement_wins(self, cops) -> bool:
        """True when this placement beats every robber reply."""
        cw = tuple(sorted(cops))
        if len(cw) != self.k:
            raise InputError(f"placement has {len(cw)} cops, expected {self.k}")
        if cw not in self._index:
            raise InputError(f"placement {cw} is not over vertices 0..{self._d.n - 1}")
        n = self._d.n
        base = self._index[cw] * n * 2
        return all(self._win[base + 2 * r] for r in range(n))

    def winning_placements(self):
        """Cop multisets that beat every robber reply, lexicographic order."""
        for cw in self._cop_sets:
            if self.placement_wins(cw):
                yield cw

    def positions(self):
        """Every canonical position of the game."""
        for cw in self._cop_sets:
            for r in range(self._d.n):
                yield GamePosition(cw, r, COPS)
                yield GamePosition(cw, r, ROBBER)


def solve(d: Digraph, k: int, state_budget: int = DEFAULT_STATE_BUDGET) -> SolveResult:
    """Classify every position of the k-cop game on d.

    Raises StateBudgetExceeded before allocating anything when the position
    space (or the cop move table) would not fit the budget.
    """
    if k < 1:
        raise InputError(f"cop count must be >= 1, got {k}")
    n = d.n
    cop_sets = list(combinations_with_replacement(range(n), k))
    num_cw = len(cop_sets)
    total = num_cw * n * 2
    if total > state_budget:
        raise StateBudgetExceeded(
            f"{total} positions exceed the state budget of {state_budget}"
        )
    index = {cw: i for i, cw in enumerate(cop_sets)}
    out_opts = [(v,) + d.out_adj[v] for v in range(n)]

    copsucc = []
    entries = 0
    for cw in cop_sets:
        succ = sorted({
            index[tuple(sorted(t))]
            for t in product(*[out_opts[c] for c in cw])
        })
        entries += len(succ)
        if entries > state_budget:
            raise StateBudgetExceeded(
                f"cop move table exceeds the state budget of {state_budget}"
            )
        copsucc.append(succ)
    coppred = [[] for _ in range(num_cw)]
    for ci, succs in enumerate(copsucc):
        for s in succs:
            coppred[s].append(ci)

    rpred = [(r,) + d.in_adj[r] for r in range(n)]
    half_total = num_cw * n
    win = bytearray(2 * half_total)
    rank = [0] * (2 * half_total)
    counter = [0] * half_total
    out_counts = [1 + d.out_degree(r) for r in range(n)]
    for ci in range(num_cw):
        base = ci * n
        for r in range(n):
            counter[base + r] = out_counts[r]

    queue = deque()
    for ci, cw in enumerate(cop_sets):
        base2 = ci * n * 2
        for r in set(cw):
            p = base2 + 2 * r
            win[p] = 1
            win[p + 1] = 1
            queue.append(p)
            queue.append(p + 1)

    popleft = queue.popleft
    append = queue.append
    while queue:
        pid = popleft()
        rk1 = rank[pid] + 1
        half = pid >> 1
        ci, r = divmod(half, n)
        if pid & 1:
            # A robber-to-move position became winning: every cop-to-move
            # position one cop move earlier wins too.
            for ci2 in coppred[ci]:
                p = (ci2 * n + r) * 2
                if not win[p]:
                    win[p] = 1
                    rank[p] = rk1
                    append(p)
        else:
            # A cop-to-move position became winning: robber predecessors
            # lose one escape option each.
            base = ci * n
            for r1 in rpred[r]:
                h = base + r1
                p = h * 2 + 1
                if not win[p]:
                    left = counter[h] - 1
                    counter[h] = left
                    if left == 0:
                        win[p] = 1
                        rank[p] = rk1
                        append(p)

    return SolveResult(d, k, cop_sets, index, copsucc, win, rank)


def cops_win_from_placement(result: SolveResult, cops) -> bool:
    """True when the placement wins against every robber placement."""
    return result.placement_wins(cops)


def cop_number(d: Digraph, k_max: int, state_budget: int = DEFAULT_STATE_BUDGET):
    """Smallest k <= k_max with a placement that beats every robber reply.

    Returns None when even k_max cops do not suffice.  k_max = d.n always
    suffices because the cops can then cover every vertex.
    """
    if k_max < 1:
        raise InputError(f"k_max must be >= 1, got {k_max}")
    for k in range(1, k_max + 1):
        result = solve(d, k, state_budget)
        if any(True for _ in result.winning_placements()):
            return k
    return None


@dataclass(frozen=True)
class GameTrace:
    """A played-out game under the deterministic optimal strategies.

    snapshots[0] is the position right after both placements (cops to
    move); each later snapshot follows one half-move.  A capture trace ends
    on a position with the robber caught; a robber-escape trace ends at the
    first repeated position, with repeat holding the indexes of the two
    equal snapshots.
    """

    k: int
    cops_start: tuple
    robber_start: int
    snapshots: tuple
    outcome: str
    repeat: tuple | None


def play_trace(
    d: Digraph,
    k: int,
    max_rounds: int | None = None,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> GameTrace:
    """Solve the game and play both sides deterministically.

    The cop player picks the placement beating the most robber replies
    (lexicographically first on ties) and then always moves along
    best_move.  The robber places on a losing-for-cops vertex when one
    exists, otherwise on a vertex of maximal rank, and keeps maximizing
    rank (or keeps the game unwinnable for the cops) afterwards, breaking
    ties toward smaller positions.
    """
    result = solve(d, k, state_budget)
    n = d.n

    best_cw, best_count = None, -1
    for cw in result.placements():
        cnt = sum(
            1 for r in range(n) if result.win(GamePosition(cw, r, COPS))
        )
        if cnt > best_count:
            best_cw, best_count = cw, cnt
    safe = [
        r for r in range(n) if not result.win(GamePosition(best_cw, r, COPS))
    ]
    if safe:
        r0 = safe[0]
    else:
        r0, best_rank = 0, -1
        for r in range(n):
            rk = result.rank(GamePosition(best_cw, r, COPS))
            if rk > best_rank:
                r0, best_rank = r, rk

    pos = GamePosition(best_cw, r0, COPS)
    snapshots = [pos]
    seen = {pos: 0}
    half_limit = 2 * max_rounds if max_rounds is not None else result.num_positions + 1
    outcome = None
    repeat = None
    while True:
        if pos.robber in pos.cops:
            outcome = "capture"
            break
        if len(snapshots) - 1 >= half_limit:
            raise RuntimeError(
                "trace exceeded the round limit without capture or repetition"
            )
        if result.win(pos):
            if pos.to_move == COPS:
                nxt = result.best_move(pos)
            else:
                nxt, best_rank = None, -1
                for s in legal_moves(d, pos):
                    rk = result.rank(s)
                    if rk > best_rank:
                        nxt, best_rank = s, rk
        else:
            succ = legal_moves(d, pos)
            if pos.to_move == COPS:
                nxt = succ[0]
            else:
                nxt = next(s for s in succ if not result.win(s))
        pos = nxt
        if pos in seen:
            snapshots.append(pos)
            outcome = "robber-escape"
            repeat = (seen[pos], len(snapshots) - 1)
            break
        seen[pos] = len(snapshots)
        snapshots.append(pos)

    return GameTrace(
        k=k,
        cops_start=best_cw,
        robber_start=r0,
        snapshots=tuple(snapshots),
        outcome=outcome,
        repeat=repeat,
    )
