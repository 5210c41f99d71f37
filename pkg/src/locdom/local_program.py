"""The dominating-set pipeline as a LOCAL-model node program.

The schedule is fixed per graph class, so every node knows from the round
number alone which message wave it is in:

    round 1                : wake-up token (neighbors learn each other's ids)
    round 2                : broadcast own adjacency row
    round 3                : decide phase-1 membership, broadcast the bit
    round 4 *              : broadcast post-phase-1 redness
    round 5 *              : decide pair-selection membership, broadcast it
    then, for level i = cap..0, three rounds per level:
        level round 1      : fold in election results of the previous
                             level, broadcast current redness
        level round 2      : broadcast residual degree        (levels >= 1)
        level round 3      : undominated nodes elect a dominator (>= 1)
    final silent step      : still-red nodes with residual degree 0 pick
                             themselves (level 0), the rest go to cleanup

    (* only for classes whose pair-selection phase is enabled)

Total communication rounds: 5 + 3*cap + 1 with pair selection, 3 + 3*cap
+ 1 without, both within the 4 + 3*(cap+1) budget. Degree-0 nodes decide
at round 1 without communicating.

A node that elects a dominator u knows u enters the level set, so it can
mark itself dominated immediately; conversely a red node adjacent to any
elected vertex necessarily had a candidate and elected someone itself.
This keeps every node's own color current without an extra wave.
"""
from __future__ import annotations

from .classes import GraphClass, params_for
from .engine import Broadcast, NodeProgram, RunRecord, run_rounds
from .graph import Graph, verify_dominating_set
from .phases import (
    DomSetResult,
    PhaseTrace,
    build_candidate_cover,
    dominable_within,
    pipeline_rounds,
)


class _State:
    __slots__ = (
        "me",
        "deg",
        "nbrs",
        "rows",
        "d1",
        "red_sofar",
        "b",
        "d2",
        "red",
        "kind",
        "level",
        "red_low",
        "my_resid",
    )

    def __init__(self, me: int, deg: int):
        self.me = me
        self.deg = deg
        self.nbrs: tuple[int, ...] = ()
        self.rows: dict[int, tuple[int, ...]] = {}
        self.d1 = False
        self.red_sofar = False
        self.b: tuple[int, ...] = ()
        self.d2 = False
        self.red = False
        self.kind = "out"
        self.level: int | None = None
        self.red_low: int | None = None
        self.my_resid = 0


class PipelineProgram(NodeProgram):
    """Parameterized by the class constants; knows nothing about the graph."""

    def __init__(self, cap: int, pair_threshold: int | None):
        self.cap = cap
        self.threshold = pair_threshold
        self.setup = 5 if pair_threshold is not None else 3

    def init(self, node_id: int, degree: int) -> _State:
        return _State(node_id, degree)

    def output(self, state: _State):
        return (state.kind, state.level, state.b, state.red_low)

    def step(self, state: _State, round_no: int, inbox):
        if round_no == 1:
            if state.deg == 0:
                # isolated: red through every level, self-elected at level 0
                state.kind, state.level, state.red_low = "d3", 0, 0
                return state, None, True
            return state, Broadcast(None), False

        if round_no == 2:
            state.nbrs = tuple(sender for sender, _ in inbox)
            return state, Broadcast(state.nbrs), False

        if round_no == 3:
            state.rows = {sender: row for sender, row in inbox}
            if state.deg <= 3:
                state.d1 = False  # the neighbors themselves dominate N(me)
            else:
                targets = frozenset(state.nbrs)
                cover = build_candidate_cover(
                    state.me, state.nbrs, state.rows.__getitem__
                )
                state.d1 = not dominable_within(targets, cover, 3)
            if state.d1:
                state.kind = "d1"
            return state, Broadcast(state.d1), False

        if self.threshold is not None and round_no == 4:
            state.red_sofar = not state.d1 and not any(bit for _, bit in inbox)
            return state, Broadcast(state.red_sofar), False

        if self.threshold is not None and round_no == 5:
            counts: dict[int, int] = {}
            for sender, was_red in inbox:
                if was_red:
                    for z in state.rows[sender]:
                        if z != state.me:
                            counts[z] = counts.get(z, 0) + 1
            state.b = tuple(
                sorted(z for z, c in counts.items() if c >= self.threshold)
            )
            state.d2 = bool(state.b)
            return state, Broadcast(state.d2), False

        # iteration block: three slots per level, from cap down to 0
        t = round_no - self.setup - 1
        level = self.cap - t // 3
        slot = t % 3

        if slot == 0:  # fold in previous results, broadcast redness
            if level == self.cap:
                if self.threshold is not None:
                    nbr_green = any(bit for _, bit in inbox)
                    if state.d2 and not state.d1:
                        state.kind = "d2"
                    state.red = state.red_sofar and not state.d2 and not nbr_green
                else:
                    state.red_sofar = not state.d1 and not any(b for _, b in inbox)
                    state.red = state.red_sofar
            else:
                if inbox:  # election messages: I entered the previous level set
                    state.kind, state.level = "d3", level + 1
                state.red = state.red and state.kind == "out"
            if state.red:
                state.red_low = level
            return state, Broadcast(state.red), False

        if slot == 1:
            state.my_resid = sum(1 for _, is_red in inbox if is_red)
            if level == 0:
                # final step: no residual degrees to announce, decide and stop
                if state.red:
                    if state.my_resid == 0:
                        state.kind, state.level = "d3", 0
                    else:
                        state.kind = "cleanup"
                return state, None, True
            return state, Broadcast(state.my_resid), False

        # slot == 2, level >= 1: election
        outbox = None
        if state.red:
            pick = None
            for sender, resid in inbox:
                if resid == level and (pick is None or sender < pick):
                    pick = sender
            if state.my_resid == level and (pick is None or state.me < pick):
                pick = state.me
            if pick is not None:
                state.red = False
                if pick == state.me:
                    state.kind, state.level = "d3", level
                else:
                    outbox = {pick: True}
        return state, outbox, False


def assemble_result(
    g: Graph, cls: GraphClass, outputs, rounds_used: int
) -> DomSetResult:
    """Build a DomSetResult from per-node outputs."""
    params = params_for(cls)
    cap = params.residual_cap
    d1, d2, cleanup = set(), set(), set()
    b: dict[int, frozenset[int]] = {}
    deltas: dict[int, set[int]] = {i: set() for i in range(cap, -1, -1)}
    red_lows: list[int | None] = [None] * g.n
    for v, (kind, level, b_row, red_low) in enumerate(outputs):
        red_lows[v] = red_low
        if b_row:
            b[v] = frozenset(b_row)
        if kind == "d1":
            d1.add(v)
        elif kind == "d2":
            d2.add(v)
        elif kind == "d3":
            deltas[level].add(v)
        elif kind == "cleanup":
            cleanup.add(v)
    r_sizes = {
        i: sum(1 for low in red_lows if low is not None and low <= i)
        for i in range(cap, -1, -1)
    }
    warnings = []
    max_resid = 0
    in_r_cap = [low is not None for low in red_lows]
    for v in range(g.n):
        resid = sum(1 for u in g.adjacency[v] if in_r_cap[u])
        max_resid = max(max_resid, resid)
    if max_resid > cap:
        warnings.append(
            "class invariant violated: residual degree "
            f"{max_resid} exceeds cap {cap} after pair selection"
        )
    if cleanup:
        warnings.append(
            f"class invariant violated: {len(cleanup)} vertices reached cleanup"
        )
    dominating = d1 | d2 | cleanup
    for members in deltas.values():
        dominating |= members
    trace = PhaseTrace(
        d1=frozenset(d1),
        w=frozenset(b),
        b=dict(sorted(b.items())),
        d2=frozenset(d2),
        deltas={i: frozenset(members) for i, members in deltas.items()},
        r_sizes=r_sizes,
        cleanup=frozenset(cleanup),
        rounds_used=rounds_used,
    )
    result = DomSetResult(frozenset(dominating), trace, cls, tuple(warnings))
    assert verify_dominating_set(g, result.dominating_set)
    return result


def run_pipeline_local(g: Graph, cls: GraphClass) -> DomSetResult:
    """Execute the pipeline through the message-passing engine."""
    params = params_for(cls)
    prog = PipelineProgram(params.residual_cap, params.pair_threshold)
    record: RunRecord = run_rounds(g, prog, round_limit=pipeline_rounds(g, params))
    return assemble_result(g, cls, record.outputs, record.rounds_used)


class Phase1Program(NodeProgram):
    """Standalone phase-1 membership program; exactly 2 communication rounds."""

    def init(self, node_id: int, degree: int):
        return {"me": node_id, "deg": degree, "nbrs": (), "d1": False}

    def step(self, state, round_no, inbox):
        if round_no == 1:
            if state["deg"] == 0:
                return state, None, True
            return state, Broadcast(None), False
        if round_no == 2:
            state["nbrs"] = tuple(sender for sender, _ in inbox)
            return state, Broadcast(state["nbrs"]), False
        if state["deg"] <= 3:
            return state, None, True
        rows = {sender: row for sender, row in inbox}
        targets = frozenset(state["nbrs"])
        cover = build_candidate_cover(state["me"], state["nbrs"], rows.__getitem__)
        state["d1"] = not dominable_within(targets, cover, 3)
        return state, None, True

    def output(self, state):
        return state["d1"]


def phase1_d1_local(g: Graph) -> tuple[set[int], int]:
    """Phase 1 through the engine; returns (d1, rounds_used)."""
    record = run_rounds(g, Phase1Program(), round_limit=2)
    return {v for v, bit in enumerate(record.outputs) if bit}, record.rounds_used
