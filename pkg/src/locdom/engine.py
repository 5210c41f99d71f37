"""Synchronous-round message-passing engine.

Nodes know only their own id and degree at start; everything else must
arrive through messages. Per round the engine calls every active node's
``step`` with the messages sent to it in the previous round, then delivers
the new outboxes. A message placed on an edge in round r is therefore read
in round r+1. Within a round all steps are logically simultaneous: no
outbox is delivered before every node has stepped.

``rounds_used`` counts communication rounds: the last round in which any
message was sent. A trailing round in which nodes only read their final
inboxes and halt is local computation and costs nothing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .graph import Graph


class Broadcast:
    """Outbox wrapper: send the same payload to every neighbor."""

    __slots__ = ("payload",)

    def __init__(self, payload: Any):
        self.payload = payload


class NodeProgram:
    """Base class for node programs.

    Subclasses override ``init``, ``step`` and ``output``. ``step`` must
    depend only on its arguments; it may not inspect the graph.
    """

    def init(self, node_id: int, degree: int) -> Any:
        raise NotImplementedError

    def step(
        self, state: Any, round_no: int, inbox: list[tuple[int, Any]]
    ) -> tuple[Any, Broadcast | dict[int, Any] | None, bool]:
        """Return (new state, outbox, halt). Outbox may be None, a
        Broadcast, or a dict keyed by neighbor id."""
        raise NotImplementedError

    def output(self, state: Any) -> Any:
        raise NotImplementedError


@dataclass(frozen=True)
class RunRecord:
    outputs: tuple[Any, ...]
    rounds_used: int


class RoundLimitError(RuntimeError):
    """A program failed to halt (or kept talking) within the round limit."""

    def __init__(self, round_limit: int, partial_outputs: tuple[Any, ...]):
        super().__init__(f"nodes still communicating after {round_limit} rounds")
        self.round_limit = round_limit
        self.partial_outputs = partial_outputs


def run_rounds(
    g: Graph,
    prog: NodeProgram,
    round_limit: int,
    _node_order: Sequence[int] | None = None,
) -> RunRecord:
    """Run prog on g until every node halts or the round limit is hit.

    ``_node_order`` only changes the internal iteration order; results are
    identical for any permutation (used by tests to prove that).
    """
    if round_limit < 0:
        raise ValueError("round_limit must be nonnegative")
    order = list(_node_order) if _node_order is not None else list(range(g.n))
    if sorted(order) != list(range(g.n)):
        raise ValueError("_node_order must be a permutation of the vertices")

    states: list[Any] = [None] * g.n
    for v in order:
        states[v] = prog.init(v, g.degree(v))
    active = set(range(g.n))
    inboxes: list[list[tuple[int, Any]]] = [[] for _ in range(g.n)]
    rounds_used = 0

    round_no = 0
    while active:
        round_no += 1
        if round_no > round_limit + 1:
            outputs = tuple(
                prog.output(states[v]) if v not in active else None
                for v in range(g.n)
            )
            raise RoundLimitError(round_limit, outputs)
        next_inboxes: list[list[tuple[int, Any]]] = [[] for _ in range(g.n)]
        sent = False
        halted: list[int] = []
        for v in order:
            if v not in active:
                continue
            states[v], outbox, halt = prog.step(states[v], round_no, inboxes[v])
            if outbox is not None:
                if isinstance(outbox, Broadcast):
                    pairs = [(u, outbox.payload) for u in g.adjacency[v]]
                else:
                    for u in outbox:
                        if not g.has_edge(v, u):
                            raise ValueError(
                                f"node {v} attempted to message non-neighbor {u}"
                            )
                    pairs = list(outbox.items())
                if pairs:
                    sent = True
                    for u, payload in pairs:
                        next_inboxes[u].append((v, payload))
            if halt:
                halted.append(v)
        if sent:
            rounds_used = round_no
        active.difference_update(halted)
        for box in next_inboxes:
            box.sort(key=lambda pair: pair[0])
        inboxes = next_inboxes

    if rounds_used > round_limit:
        outputs = tuple(prog.output(states[v]) for v in range(g.n))
        raise RoundLimitError(round_limit, outputs)
    return RunRecord(tuple(prog.output(states[v]) for v in range(g.n)), rounds_used)


class _BallGather(NodeProgram):
    """Flood adjacency lists for exactly ``radius`` rounds.

    After r rounds a node knows the ids of all vertices at distance <= r
    and the full adjacency of those at distance <= r-1.
    """

    def __init__(self, radius: int):
        self.radius = radius

    def init(self, node_id: int, degree: int) -> dict[str, Any]:
        return {"id": node_id, "adj": {}, "fresh": {}}

    def step(self, state, round_no, inbox):
        for _sender, payload in inbox:
            for u, nbrs in payload:
                if u not in state["adj"]:
                    state["adj"][u] = nbrs
                    state["fresh"][u] = nbrs
        if round_no == 1:
            out: list[tuple[int, tuple[int, ...]]] = []
        elif round_no == 2:
            # neighbor ids arrived with round-1 messages; own row is now known
            me = state["id"]
            own = tuple(sorted(sender for sender, _ in inbox))
            state["adj"][me] = own
            out = [(me, own)] + sorted(state["fresh"].items())
            state["fresh"] = {}
        else:
            out = sorted(state["fresh"].items())
            state["fresh"] = {}
        if round_no > self.radius:
            return state, None, True
        return state, Broadcast(tuple(out)), False

    def output(self, state):
        return dict(state["adj"])


def gather_ball(g: Graph, radius: int) -> RunRecord:
    """Convenience wrapper: every node collects its radius-r view.

    Outputs map vertex id -> adjacency tuple for every vertex whose full
    adjacency the node has learned. Uses exactly ``radius`` communication
    rounds (0 for radius 0).
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    return run_rounds(g, _BallGather(radius), round_limit=radius)
