"""Interactive workbench sessions: judge a student's solver moves one by one.

A session walks the same label table the batch solver uses, but the student
drives it: pick a Current node, work through each of its neighbors, shade it,
repeat. Every submitted move gets a verdict; accepted moves advance the table
exactly as the procedure prescribes, rejected moves change nothing. Ties for
the lowest dist accept any of the tied nodes, so different students may take
different (equally correct) routes through the same network.
"""

from __future__ import annotations

import json
import random
import uuid
from dataclasses import dataclass

from .dijkstra import LabelTable, NodeLabel, SpanningTree, run_dijkstra
from .errors import MalformedMove, SessionDone
from .graph import Edge, Graph, NodeId, format_cost

MOVE_KINDS = ("select_current", "set_label", "shade_current", "finish")

PHASE_SELECTING = "selecting"
PHASE_RELAXING = "relaxing"
PHASE_DONE = "done"


@dataclass(frozen=True)
class Move:
    """One worksheet action. Field use depends on ``kind``:

    - select_current / shade_current: ``node``
    - set_label: ``node``, ``dist``, ``last`` (``last`` may be None when the
      row legitimately has no predecessor, i.e. the origin's own row)
    - finish: no fields
    """

    kind: str
    node: NodeId | None = None
    dist: float | None = None
    last: NodeId | None = None

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "node": self.node, "dist": self.dist, "last": self.last}


@dataclass(frozen=True)
class Verdict:
    """The judge's response: accepted or not, why, and a hint when rejected."""

    accepted: bool
    explanation: str
    expected: dict | None = None

    def to_json_dict(self) -> dict:
        return {"accepted": self.accepted, "explanation": self.explanation, "expected": self.expected}


class Session:
    """A student's in-progress run on one graph from one origin.

    The label table, phase, Current node, and per-round resolved set make up
    the algorithmic state; the history is an append-only move log and does not
    participate in state comparisons.
    """

    def __init__(self, graph: Graph, origin: NodeId, session_id: str | None = None) -> None:
        graph.require_node(origin)
        self.id = session_id or uuid.uuid4().hex
        self.graph = graph
        self.origin = origin
        self.table = LabelTable(origin, graph.nodes)
        # The first worksheet step is pre-completed: origin shaded at 0, each
        # of its neighbors labeled with the connecting edge cost.
        for nbr, cost in graph.neighbors(origin):
            self.table.set(nbr, NodeLabel(dist=cost, last=origin, shaded=False))
        self.current: NodeId | None = None
        self.resolved: set[NodeId] = set()
        self.history: list[tuple[Move, Verdict]] = []
        self.phase = PHASE_SELECTING if self.table.frontier() else PHASE_DONE

    # -- state inspection ---------------------------------------------------

    def algorithm_state(self) -> dict:
        """Canonical view of the judged state (history excluded)."""
        return {
            "origin": self.origin,
            "phase": self.phase,
            "current": self.current,
            "resolved": sorted(self.resolved),
            "labels": {
                n: {"dist": lb.dist, "last": lb.last, "shaded": lb.shaded}
                for n, lb in sorted(self.table.labels.items())
            },
        }

    def state_fingerprint(self) -> str:
        return json.dumps(self.algorithm_state(), sort_keys=True)

    def _round_pending(self) -> list[NodeId]:
        assert self.current is not None
        return sorted(n for n, _ in self.graph.neighbors(self.current) if n not in self.resolved)

    def _refresh_phase(self) -> None:
        self.phase = PHASE_SELECTING if self.table.frontier() else PHASE_DONE

    # -- judging ------------------------------------------------------------

    def submit(self, move: Move) -> Verdict:
        self._check_shape(move)
        if self.phase == PHASE_DONE and move.kind != "finish":
            raise SessionDone(f"session {self.id} is complete; only 'finish' is accepted")
        verdict = self._judge(move)
        self.history.append((move, verdict))
        return verdict

    def _check_shape(self, move: Move) -> None:
        if move.kind not in MOVE_KINDS:
            raise MalformedMove(f"unknown move kind {move.kind!r}")
        if move.kind in ("select_current", "shade_current", "set_label"):
            if move.node is None:
                raise MalformedMove(f"{move.kind} requires a node")
            if not self.graph.has_node(move.node):
                raise MalformedMove(f"{move.node!r} is not a node of this network")
        if move.kind == "set_label":
            if move.dist is None:
                raise MalformedMove("set_label requires a dist value")
            if move.last is not None and not self.graph.has_node(move.last):
                raise MalformedMove(f"{move.last!r} is not a node of this network")

    def _judge(self, move: Move) -> Verdict:
        if move.kind == "finish":
            return self._judge_finish()
        if move.kind == "select_current":
            return self._judge_select(move)
        if move.kind == "set_label":
            return self._judge_label(move)
        return self._judge_shade(move)

    def _judge_finish(self) -> Verdict:
        if self.phase == PHASE_DONE:
            return Verdict(True, "Every node with a dist is shaded; the run is complete.")
        pending = self.table.frontier()
        assert pending is not None
        _, candidates = pending
        return Verdict(
            False,
            f"Not finished: {', '.join(candidates)} still await processing.",
            expected={"candidates": list(candidates)},
        )

    def _judge_select(self, move: Move) -> Verdict:
        node = move.node
        if self.phase == PHASE_RELAXING:
            return Verdict(
                False,
                f"{self.current} is the Current node; resolve its neighbors and shade it "
                "before selecting a new one.",
                expected={"pending": self._round_pending()},
            )
        label = self.table[node]
        lowest, candidates = self.table.frontier()
        if label.shaded:
            return Verdict(
                False,
                f"{node} is already shaded; pick an unshaded node.",
                expected={"candidates": list(candidates)},
            )
        if label.blank:
            return Verdict(
                False,
                f"{node} has no dist yet (blank rows are excluded); "
                f"the lowest dist is {format_cost(lowest)} at {', '.join(candidates)}.",
                expected={"candidates": list(candidates)},
            )
        if label.dist != lowest:
            return Verdict(
                False,
                f"{node} has dist {format_cost(label.dist)}, but "
                f"{', '.join(candidates)} has the lower dist {format_cost(lowest)}.",
                expected={"candidates": list(candidates)},
            )
        self.current = node
        self.resolved = set()
        self.phase = PHASE_RELAXING
        tied = "" if len(candidates) == 1 else " (tied nodes are all valid choices)"
        return Verdict(True, f"{node} has the lowest dist {format_cost(lowest)}{tied}.")

    def _correct_label(self, neighbor: NodeId, edge_cost: float) -> tuple[float, NodeId | None]:
        candidate = self.table[self.current].dist + edge_cost
        existing = self.table[neighbor]
        if existing.blank or candidate < existing.dist:
            return candidate, self.current
        return existing.dist, existing.last

    def _judge_label(self, move: Move) -> Verdict:
        if self.phase != PHASE_RELAXING:
            return Verdict(False, "No Current node is selected; select one first.")
        edge = self.graph.edge_between(self.current, move.node)
        if edge is None:
            return Verdict(False, f"{move.node} is not a neighbor of Current node {self.current}.")
        want_dist, want_last = self._correct_label(move.node, edge.cost)
        if (move.dist, move.last) != (want_dist, want_last):
            existing = self.table[move.node]
            if (want_dist, want_last) == (existing.dist, existing.last):
                reason = (
                    f"No update needed for {move.node}: going through {self.current} "
                    f"is not shorter, so its row stays at dist "
                    f"{format_cost(existing.dist)}, last {existing.last or '-'}."
                )
            else:
                reason = (
                    f"{move.node} should get dist {format_cost(want_dist)} "
                    f"({format_cost(self.table[self.current].dist)} + {format_cost(edge.cost)}) "
                    f"with last {want_last}."
                )
            return Verdict(False, reason, expected={"dist": want_dist, "last": want_last})
        existing = self.table[move.node]
        changed = (want_dist, want_last) != (existing.dist, existing.last)
        self.table.set(move.node, NodeLabel(dist=want_dist, last=want_last, shaded=existing.shaded))
        self.resolved.add(move.node)
        if changed:
            note = f"{move.node} updated to dist {format_cost(want_dist)}, last {want_last}."
        else:
            note = f"Confirmed: no update needed for {move.node}."
        return Verdict(True, note)

    def _judge_shade(self, move: Move) -> Verdict:
        if self.phase != PHASE_RELAXING:
            return Verdict(False, "No Current node is selected; there is nothing to shade.")
        if move.node != self.current:
            return Verdict(False, f"The Current node is {self.current}, not {move.node}.")
        pending = self._round_pending()
        if pending:
            return Verdict(
                False,
                f"Resolve every neighbor of {self.current} first; "
                f"still pending: {', '.join(pending)}.",
                expected={"unresolved": pending},
            )
        label = self.table[self.current]
        self.table.set(self.current, NodeLabel(dist=label.dist, last=label.last, shaded=True))
        shaded = self.current
        self.current = None
        self.resolved = set()
        self._refresh_phase()
        closing = " All reachable nodes are shaded." if self.phase == PHASE_DONE else ""
        return Verdict(True, f"{shaded} is shaded; its dist is final.{closing}")


def start_session(g: Graph, origin: NodeId, session_id: str | None = None) -> Session:
    """Open a session with the first worksheet step already filled in."""
    return Session(g, origin, session_id)


def submit_move(session: Session, move: Move) -> tuple[Session, Verdict]:
    """Judge one move. Accepted moves advance the table; rejections change nothing."""
    verdict = session.submit(move)
    return session, verdict


def reveal_solution(session: Session) -> tuple[LabelTable, SpanningTree]:
    """The batch solver's answer for this session's graph and origin (read-only)."""
    return run_dijkstra(session.graph, session.origin)


def correct_next_moves(session: Session, rng: random.Random | None = None) -> list[Move]:
    """The moves a perfect student could submit for the current round.

    With an ``rng``, tie choices and neighbor order are randomized among the
    legal options; otherwise the lexicographically smallest choice is taken.
    """
    if session.phase == PHASE_DONE:
        return [Move("finish")]
    if session.phase == PHASE_SELECTING:
        _, candidates = session.table.frontier()
        pick = rng.choice(candidates) if rng else candidates[0]
        return [Move("select_current", node=pick)]
    moves = []
    pending = session._round_pending()
    if rng:
        rng.shuffle(pending)
    for nbr in pending:
        edge = session.graph.edge_between(session.current, nbr)
        dist, last = session._correct_label(nbr, edge.cost)
        moves.append(Move("set_label", node=nbr, dist=dist, last=last))
    moves.append(Move("shade_current", node=session.current))
    return moves


def self_play(session: Session, rng: random.Random | None = None) -> list[tuple[Move, Verdict]]:
    """Drive a session to completion with correct moves; returns the transcript.

    Raises AssertionError if the judge ever rejects one of its own moves,
    which would mean the tutor and the judge disagree.
    """
    transcript: list[tuple[Move, Verdict]] = []
    while session.phase != PHASE_DONE:
        for move in correct_next_moves(session, rng):
            verdict = session.submit(move)
            assert verdict.accepted, f"self-play move rejected: {move} -> {verdict.explanation}"
            transcript.append((move, verdict))
    verdict = session.submit(Move("finish"))
    assert verdict.accepted
    transcript.append((Move("finish"), verdict))
    return transcript


# --- JSON codec ------------------------------------------------------------


def move_from_json_dict(payload: dict) -> Move:
    """Decode a move object from the wire; unknown shapes raise MalformedMove."""
    if not isinstance(payload, dict):
        raise MalformedMove("move must be a JSON object")
    kind = payload.get("kind")
    if not isinstance(kind, str):
        raise MalformedMove("move requires a string 'kind'")
    node = payload.get("node")
    dist = payload.get("dist")
    last = payload.get("last")
    if node is not None and not isinstance(node, str):
        raise MalformedMove("'node' must be a string")
    if last is not None and not isinstance(last, str):
        raise MalformedMove("'last' must be a string or null")
    if dist is not None:
        if isinstance(dist, bool) or not isinstance(dist, (int, float)):
            raise MalformedMove("'dist' must be a number")
        dist = float(dist)
    return Move(kind=kind, node=node, dist=dist, last=last)


def graph_to_json_dict(g: Graph) -> dict:
    return {
        "directed": g.directed,
        "nodes": list(g.nodes),
        "edges": [
            {"from": e.src, "to": e.dst, "cost": e.cost, "name": e.name} for e in g.edges
        ],
    }


def graph_from_json_dict(payload: dict) -> Graph:
    edges = [
        Edge(e["from"], e["to"], e["cost"], e.get("name"))
        for e in payload.get("edges", [])
    ]
    return Graph(payload.get("nodes", []), edges, payload.get("directed", False))


def session_to_json_dict(session: Session) -> dict:
    """The documented session-state wire shape used by the HTTP API."""
    state = session.algorithm_state()
    return {
        "id": session.id,
        "origin": session.origin,
        "phase": state["phase"],
        "current": state["current"],
        "graph": graph_to_json_dict(session.graph),
        "labels": state["labels"],
        "resolved": state["resolved"],
        "history": [
            {"move": m.to_json_dict(), "verdict": v.to_json_dict()} for m, v in session.history
        ],
    }


def session_from_json_dict(payload: dict) -> Session:
    """Rebuild a session from its wire shape (used by snapshot restore)."""
    graph = graph_from_json_dict(payload["graph"])
    session = Session(graph, payload["origin"], session_id=payload["id"])
    session.phase = payload["phase"]
    session.current = payload["current"]
    session.resolved = set(payload["resolved"])
    for node, row in payload["labels"].items():
        session.table.set(
            node,
            NodeLabel(
                dist=None if row["dist"] is None else float(row["dist"]),
                last=row["last"],
                shaded=row["shaded"],
            ),
        )
    for entry in payload["history"]:
        move = move_from_json_dict(entry["move"])
        raw = entry["verdict"]
        session.history.append(
            (move, Verdict(raw["accepted"], raw["explanation"], raw.get("expected")))
        )
    return session
