"""Chamber expansion: door-by-door face opening with alternating edge roles.

The single-chamber premise fixes every outer edge except the entrance
into the sought cycle up front.  Opening the face behind a door labels
its boundary alternately (odd walk positions join the cycle, even ones
become new doors), so each door is replaced by the path around its face.
When a face cannot be alternated but borders the outer-Hamiltonian
region, the door itself is promoted into the cycle and the face is
closed.  There is no backtracking: a labeling conflict ends the run, and
that ending is reported as evidence, never raised as a crash.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .embedding import Edge, Face, PlanarEmbedding, edge_key

__all__ = [
    "EdgeRole",
    "CarveStatus",
    "TraceEvent",
    "ChamberState",
    "CarveResult",
    "EntranceChoice",
    "CarveError",
    "OddFaceError",
    "RoleConflictError",
    "DoorAdjacencyError",
    "AdjacentEntrancesError",
    "select_entrance",
    "open_face",
    "detect_bridge_face",
    "carve",
    "carve_double",
    "chamber_count",
]


class EdgeRole(enum.Enum):
    OUTER_HAMILTONIAN = "H_o"
    INNER_HAMILTONIAN = "H_i"
    OUTER_DOOR = "D_o"
    INNER_DOOR = "D_i"
    ENTRANCE_DOOR = "d_e"
    UNASSIGNED = "-"


_HAM_ROLES = (EdgeRole.OUTER_HAMILTONIAN, EdgeRole.INNER_HAMILTONIAN)
_DOOR_ROLES = (EdgeRole.OUTER_DOOR, EdgeRole.INNER_DOOR, EdgeRole.ENTRANCE_DOOR)


class CarveStatus(enum.Enum):
    HAMILTONIAN_CYCLE = "HamiltonianCycle"
    NEAR_CYCLE = "NearCycle"
    FAILURE = "Failure"


class CarveError(Exception):
    """Base for labeling conflicts; carve converts these into Failure."""


class OddFaceError(CarveError):
    """Odd face length: the boundary cannot alternate."""


class RoleConflictError(CarveError):
    """An edge or vertex would need incompatible roles."""


class DoorAdjacencyError(CarveError):
    """Two door edges would share an endpoint."""


class AdjacentEntrancesError(ValueError):
    """Double mode needs two disjoint outer edges."""


@dataclass(frozen=True)
class TraceEvent:
    """One frontier step.  kind: open, promote, bridge, drop, close."""

    step: int
    kind: str
    door: Edge
    face_id: int
    ham_edges: tuple[Edge, ...] = ()
    door_edges: tuple[Edge, ...] = ()
    side: int = 0

    def record(self) -> str:
        def edges(es: tuple[Edge, ...]) -> str:
            return ",".join(f"{u}-{v}" for u, v in es) or "none"

        return (
            f"step={self.step} side={self.side} kind={self.kind} "
            f"door={self.door[0]}-{self.door[1]} face={self.face_id} "
            f"ham={edges(self.ham_edges)} doors={edges(self.door_edges)}"
        )


@dataclass(frozen=True)
class CarveResult:
    status: CarveStatus
    cycle: tuple[int, ...]
    roles: dict[Edge, EdgeRole]
    trace: tuple[TraceEvent, ...]
    entrances: tuple[Edge, ...]
    failure_reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.status is CarveStatus.HAMILTONIAN_CYCLE

    def role_class(self, role: EdgeRole) -> frozenset[Edge]:
        return frozenset(e for e, r in self.roles.items() if r is role)


@dataclass(frozen=True)
class EntranceChoice:
    """select_entrance outcome with its admissibility flags."""

    edge: Edge
    excluded_by: int
    cut_member: bool
    forced: bool


class ChamberState:
    """Mutable expansion state over one immutable embedding.

    Tracks the role map, the FIFO door frontier, per-vertex cycle and
    door degrees, and a union-find over cycle edges that rejects any
    cycle closing before all vertices are covered.
    """

    def __init__(self, embedding: PlanarEmbedding, entrances: tuple[Edge, ...]):
        self.embedding = embedding
        n = embedding.vertex_count
        self.roles: dict[Edge, EdgeRole] = {e: EdgeRole.UNASSIGNED for e in embedding.edges}
        self.entered_faces: set[int] = set()
        self.frontier: deque[tuple[Edge, int]] = deque()  # (door, side tag)
        self.h_count = 0
        self.trace: list[TraceEvent] = []
        self.deg_h = [0] * n
        self.deg_door = [0] * n
        self._parent = list(range(n))
        self._size = [1] * n
        self.entrances = entrances
        # Faces that hold at least one outer-Hamiltonian edge, fixed at
        # init time; this is what the door-promotion rule consults.
        self._outer_ham_faces: set[int] = set()

    # -- union-find over cycle edges ---------------------------------

    def _find(self, v: int) -> int:
        p = self._parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    # -- journaled primitive moves ------------------------------------

    def _journal_start(self) -> dict:
        return {
            "roles": {},
            "deg_h": {},
            "deg_door": {},
            "parent": {},
            "h": self.h_count,
            "entered_added": [],
            "frontier": len(self.frontier),
        }

    def _rollback(self, j: dict) -> None:
        for e, r in j["roles"].items():
            self.roles[e] = r
        for v, d in j["deg_h"].items():
            self.deg_h[v] = d
        for v, d in j["deg_door"].items():
            self.deg_door[v] = d
        for v, p in j["parent"].items():
            self._parent[v] = p
        for v, s in j.get("sizes", {}).items():
            self._size[v] = s
        self.h_count = j["h"]
        for fid in j["entered_added"]:
            self.entered_faces.discard(fid)
        while len(self.frontier) > j["frontier"]:
            self.frontier.pop()

    def enter_face(self, j: dict, fid: int) -> None:
        self.entered_faces.add(fid)
        j["entered_added"].append(fid)

    def _set_role(self, j: dict, e: Edge, role: EdgeRole) -> None:
        j["roles"].setdefault(e, self.roles[e])
        self.roles[e] = role

    def _bump(self, j: dict, table: list[int], key: str, v: int, delta: int) -> None:
        j[key].setdefault(v, table[v])
        table[v] += delta

    def add_ham_edge(self, j: dict, e: Edge, role: EdgeRole = EdgeRole.INNER_HAMILTONIAN) -> None:
        u, v = e
        old = self.roles[e]
        if old in _HAM_ROLES:
            raise RoleConflictError(f"edge {e} already has a cycle role")
        if self.deg_h[u] >= 2 or self.deg_h[v] >= 2:
            raise RoleConflictError(f"edge {e} would give a vertex three cycle edges")
        ru, rv = self._find(u), self._find(v)
        if ru == rv and self.h_count + 1 != self.embedding.vertex_count:
            raise RoleConflictError(f"edge {e} would close a cycle shorter than n")
        if old in _DOOR_ROLES:
            self._bump(j, self.deg_door, "deg_door", u, -1)
            self._bump(j, self.deg_door, "deg_door", v, -1)
        self._set_role(j, e, role)
        self._bump(j, self.deg_h, "deg_h", u, 1)
        self._bump(j, self.deg_h, "deg_h", v, 1)
        if ru != rv:
            if self._size[ru] > self._size[rv]:
                ru, rv = rv, ru
            j["parent"].setdefault(ru, self._parent[ru])
            j.setdefault("sizes", {}).setdefault(rv, self._size[rv])
            self._parent[ru] = rv
            self._size[rv] += self._size[ru]
        self.h_count += 1

    def add_door_edge(self, j: dict, e: Edge, role: EdgeRole = EdgeRole.INNER_DOOR) -> None:
        u, v = e
        if self.roles[e] is not EdgeRole.UNASSIGNED:
            raise RoleConflictError(f"edge {e} already holds a role")
        if self.deg_door[u] or self.deg_door[v]:
            raise DoorAdjacencyError(f"door {e} would touch another door edge")
        self._set_role(j, e, role)
        self._bump(j, self.deg_door, "deg_door", u, 1)
        self._bump(j, self.deg_door, "deg_door", v, 1)

    # -- queries -------------------------------------------------------

    def unentered_face(self, e: Edge) -> Face | None:
        ids = [fid for fid in self.embedding.edge_faces[e] if fid not in self.entered_faces]
        if not ids:
            return None
        return self.embedding.faces[ids[0]]

    def face_borders_outer_ham(self, face: Face) -> bool:
        """The promotion test: does any edge of the face lie on a face
        that carries an outer-Hamiltonian edge?"""
        edge_faces = self.embedding.edge_faces
        return any(
            fid in self._outer_ham_faces for e in face.edges for fid in edge_faces[e]
        )

    def copy(self) -> "ChamberState":
        out = ChamberState.__new__(ChamberState)
        out.embedding = self.embedding
        out.roles = dict(self.roles)
        out.entered_faces = set(self.entered_faces)
        out.frontier = deque(self.frontier)
        out.h_count = self.h_count
        out.trace = list(self.trace)
        out.deg_h = list(self.deg_h)
        out.deg_door = list(self.deg_door)
        out._parent = list(self._parent)
        out._size = list(self._size)
        out.entrances = self.entrances
        out._outer_ham_faces = set(self._outer_ham_faces)
        return out


def _init_state(embedding: PlanarEmbedding, entrances: tuple[Edge, ...]) -> ChamberState:
    state = ChamberState(embedding, entrances)
    outer = embedding.outer_face
    j = state._journal_start()
    for e in outer.edges:
        if e in entrances:
            state._set_role(j, e, EdgeRole.ENTRANCE_DOOR)
            u, v = e
            state.deg_door[u] += 1
            state.deg_door[v] += 1
        else:
            state.add_ham_edge(j, e, EdgeRole.OUTER_HAMILTONIAN)
    state.entered_faces.add(outer.id)
    for fid, face in enumerate(embedding.faces):
        if any(state.roles[e] is EdgeRole.OUTER_HAMILTONIAN for e in face.edges):
            state._outer_ham_faces.add(fid)
    for i, e in enumerate(entrances):
        state.frontier.append((e, i))
    return state


def _face_walk_from(face: Face, door: Edge, left_walk: bool) -> list[Edge]:
    """Boundary edges in walk order, the door first.

    The default direction follows the traced darts; left_walk reverses
    it.  Alternation parity is direction independent on even faces, so
    the flag only changes the order new doors reach the frontier.
    """
    darts = face.darts
    pos = next(i for i, d in enumerate(darts) if edge_key(*d) == door)
    ordered = [edge_key(*darts[(pos + k) % len(darts)]) for k in range(len(darts))]
    if left_walk:
        ordered = [ordered[0]] + ordered[1:][::-1]
    return ordered


def _apply_opening(
    state: ChamberState,
    door: Edge,
    face: Face,
    left_walk: bool = False,
    allow_odd: bool = False,
) -> tuple[tuple[Edge, ...], tuple[Edge, ...]]:
    """Alternate the face boundary from the door; atomic, raises on conflict."""
    if face.length % 2 and not allow_odd:
        raise OddFaceError(f"face {face.id} has odd length {face.length}")
    walk = _face_walk_from(face, door, left_walk)
    j = state._journal_start()
    new_h: list[Edge] = []
    new_doors: list[Edge] = []
    try:
        for i, e in enumerate(walk[1:], start=1):
            want_ham = bool(i % 2)
            role = state.roles[e]
            if role in _HAM_ROLES:
                if not want_ham:
                    raise RoleConflictError(f"edge {e} is in the cycle but lands on a door slot")
                continue
            if role in _DOOR_ROLES:
                if want_ham:
                    raise RoleConflictError(f"edge {e} is a door but lands on a cycle slot")
                continue
            if want_ham:
                state.add_ham_edge(j, e)
                new_h.append(e)
            else:
                state.add_door_edge(j, e)
                new_doors.append(e)
        state.enter_face(j, face.id)
    except CarveError:
        state._rollback(j)
        raise
    return tuple(new_h), tuple(new_doors)


def open_face(state: ChamberState, door: Edge, face: Face) -> ChamberState:
    """Pure view of one face opening: returns a new state, raises on conflict.

    New doors join the frontier in boundary-walk order from the door.
    """
    door = edge_key(*door)
    if state.roles[door] not in _DOOR_ROLES:
        raise RoleConflictError(f"edge {door} is not a door")
    if face.id in state.entered_faces:
        raise RoleConflictError(f"face {face.id} was already entered")
    out = state.copy()
    new_h, new_doors = _apply_opening(out, door, face)
    for e in new_doors:
        out.frontier.append((e, 0))
    out.trace.append(
        TraceEvent(
            step=len(out.trace),
            kind="open",
            door=door,
            face_id=face.id,
            ham_edges=new_h,
            door_edges=new_doors,
        )
    )
    return out


def detect_bridge_face(
    state: ChamberState, door: Edge, embedding: PlanarEmbedding
) -> tuple[Edge, Edge] | None:
    """Double-cut escape: look for an unassigned edge e of the door's
    face whose far face carries both an outer-Hamiltonian edge and a
    different inner door d_j.  Returns (e, d_j) or None."""
    door = edge_key(*door)
    edge_faces = embedding.edge_faces
    for fid in edge_faces[door]:
        face = embedding.faces[fid]
        for e in _face_walk_from(face, door, left_walk=False)[1:]:
            if state.roles[e] is not EdgeRole.UNASSIGNED:
                continue
            for other_fid in edge_faces[e]:
                if other_fid == fid:
                    continue
                other = embedding.faces[other_fid]
                has_outer = any(
                    state.roles[x] is EdgeRole.OUTER_HAMILTONIAN for x in other.edges
                )
                if not has_outer:
                    continue
                for x in other.edges:
                    if x != door and state.roles[x] is EdgeRole.INNER_DOOR:
                        return e, x
    return None


def _run(state: ChamberState, left_walk: bool) -> str | None:
    """Drive the frontier to exhaustion; returns a failure reason or None."""
    n = state.embedding.vertex_count
    while state.frontier and state.h_count < n:
        reason = _run_one(state, left_walk)
        if reason is not None:
            return reason
    return None


def _ham_components(state: ChamberState) -> tuple[list[list[int]], list[int]]:
    """Connected pieces of the cycle-role subgraph plus per-vertex degrees."""
    n = state.embedding.vertex_count
    adj: list[list[int]] = [[] for _ in range(n)]
    for e, r in state.roles.items():
        if r in _HAM_ROLES:
            u, v = e
            adj[u].append(v)
            adj[v].append(u)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s] or not adj[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comps.append(comp)
    return comps, [len(a) for a in adj]


def _extract_cycle(state: ChamberState) -> tuple[int, ...] | None:
    """Order the cycle-role edges into one spanning cycle, if they form one."""
    n = state.embedding.vertex_count
    comps, degs = _ham_components(state)
    if len(comps) != 1 or len(comps[0]) != n or any(d != 2 for d in degs):
        return None
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for e, r in state.roles.items():
        if r in _HAM_ROLES:
            adj[e[0]].append(e[1])
            adj[e[1]].append(e[0])
    seq = [0, min(adj[0])]
    while len(seq) < n:
        a, b = seq[-2], seq[-1]
        seq.append(adj[b][0] if adj[b][0] != a else adj[b][1])
    return tuple(seq)


def _near_cycle(state: ChamberState) -> tuple[int, ...] | None:
    """An (n-1)-cycle from the role set, closing one open path if needed."""
    n = state.embedding.vertex_count
    comps, degs = _ham_components(state)
    uncovered = [v for v in range(n) if degs[v] == 0]
    if len(comps) != 1 or len(uncovered) != 1:
        return None
    comp = comps[0]
    if len(comp) != n - 1:
        return None
    ends = [v for v in comp if degs[v] == 1]
    if not ends:
        return _cycle_order(state, comp)
    if len(ends) == 2 and state.embedding.has_edge(*ends):
        e = edge_key(*ends)
        if state.roles[e] is EdgeRole.UNASSIGNED or state.roles[e] in _DOOR_ROLES:
            # Close the open path directly: the cycle-shorter-than-n guard
            # does not apply, a sub-spanning cycle is the goal here.
            state.roles[e] = EdgeRole.INNER_HAMILTONIAN
            state.h_count += 1
            return _cycle_order(state, comp)
    return None


def _cycle_order(state: ChamberState, comp: list[int]) -> tuple[int, ...] | None:
    adj: dict[int, list[int]] = {v: [] for v in comp}
    for e, r in state.roles.items():
        if r in _HAM_ROLES and e[0] in adj and e[1] in adj:
            adj[e[0]].append(e[1])
            adj[e[1]].append(e[0])
    if any(len(x) != 2 for x in adj.values()):
        return None
    start = min(comp)
    seq = [start, min(adj[start])]
    while len(seq) < len(comp):
        a, b = seq[-2], seq[-1]
        seq.append(adj[b][0] if adj[b][0] != a else adj[b][1])
    if seq[0] not in adj[seq[-1]]:
        return None
    return tuple(seq)


def _longest_cycle_in_roles(state: ChamberState) -> int:
    comps, degs = _ham_components(state)
    best = 0
    for comp in comps:
        if all(degs[v] == 2 for v in comp):
            best = max(best, len(comp))
    return best


def _sweep_unassigned(state: ChamberState) -> None:
    for e, r in state.roles.items():
        if r is EdgeRole.UNASSIGNED:
            state.roles[e] = EdgeRole.INNER_DOOR


def _finish(state: ChamberState, reason: str | None) -> CarveResult:
    n = state.embedding.vertex_count
    if reason is None and state.h_count == n:
        cycle = _extract_cycle(state)
        if cycle is not None:
            _sweep_unassigned(state)
            return CarveResult(
                status=CarveStatus.HAMILTONIAN_CYCLE,
                cycle=cycle,
                roles=dict(state.roles),
                trace=tuple(state.trace),
                entrances=state.entrances,
            )
        reason = "edge count reached n without a single spanning cycle"
    if reason is None:
        near = _near_cycle(state)
        if near is not None:
            _sweep_unassigned(state)
            return CarveResult(
                status=CarveStatus.NEAR_CYCLE,
                cycle=near,
                roles=dict(state.roles),
                trace=tuple(state.trace),
                entrances=state.entrances,
            )
        reason = (
            f"frontier exhausted at {state.h_count} of {n} cycle edges; "
            f"longest cycle in role set: {_longest_cycle_in_roles(state)}"
        )
    else:
        reason = f"{reason}; longest cycle in role set: {_longest_cycle_in_roles(state)}"
    _sweep_unassigned(state)
    return CarveResult(
        status=CarveStatus.FAILURE,
        cycle=(),
        roles=dict(state.roles),
        trace=tuple(state.trace),
        entrances=state.entrances,
        failure_reason=reason,
    )


def carve(embedding: PlanarEmbedding, entrance: Edge, left_walk: bool = False) -> CarveResult:
    """Single-entrance expansion.  Deterministic; Failure is an outcome.

    The entrance must lie on the outer cycle.  All other outer edges are
    committed to the cycle before the first door opens.
    """
    if not embedding.is_cubic():
        raise ValueError("chamber expansion needs a cubic graph")
    entrance = edge_key(*entrance)
    if entrance not in embedding.outer_edges:
        raise ValueError(f"entrance {entrance} is not an outer edge")
    state = _init_state(embedding, (entrance,))
    reason = _run(state, left_walk)
    return _finish(state, reason)


def carve_double(
    embedding: PlanarEmbedding, entrances: tuple[Edge, Edge], left_walk: bool = False
) -> CarveResult:
    """Two interleaved expansions, one door per side per round."""
    if not embedding.is_cubic():
        raise ValueError("chamber expansion needs a cubic graph")
    e1, e2 = (edge_key(*e) for e in entrances)
    if e1 == e2:
        raise AdjacentEntrancesError("entrances must be distinct")
    if set(e1) & set(e2):
        raise AdjacentEntrancesError(f"entrances {e1} and {e2} share an endpoint")
    for e in (e1, e2):
        if e not in embedding.outer_edges:
            raise ValueError(f"entrance {e} is not an outer edge")
    state = _init_state(embedding, (e1, e2))
    reason = _run_interleaved(state, left_walk)
    return _finish(state, reason)


def _run_interleaved(state: ChamberState, left_walk: bool) -> str | None:
    """Round-robin between the two entrance sides.

    Shares all role machinery with the single run; only the door
    scheduling differs, which is what makes the trace a double spiral.
    """
    n = state.embedding.vertex_count
    queues: tuple[deque, deque] = (deque(), deque())
    while state.frontier:
        door, side = state.frontier.popleft()
        queues[side].append((door, side))
    turn = 0
    while state.h_count < n and (queues[0] or queues[1]):
        if not queues[turn]:
            turn = 1 - turn
        side_queue = queues[turn]
        state.frontier.append(side_queue.popleft())
        reason = _run_one(state, left_walk)
        if reason is not None:
            return reason
        while state.frontier:
            side_queue.append(state.frontier.popleft())
        turn = 1 - turn
    return None


def _run_one(state: ChamberState, left_walk: bool) -> str | None:
    """One frontier pop with the same rules as the main loop."""
    embedding = state.embedding
    door, side = state.frontier.popleft()
    if state.roles[door] not in _DOOR_ROLES:
        return None
    face = state.unentered_face(door)
    if face is None:
        hit = detect_bridge_face(state, door, embedding)
        if hit is not None:
            e, dj = hit
            j = state._journal_start()
            try:
                state.add_ham_edge(j, e)
                state.add_ham_edge(j, dj)
            except CarveError as exc:
                state._rollback(j)
                return f"bridge promotion failed at door {door}: {exc}"
            state.trace.append(
                TraceEvent(len(state.trace), "bridge", door, -1, ham_edges=(e, dj), side=side)
            )
            return None
        # A door into fully explored territory is promoted when it still
        # borders the outer-Hamiltonian region and the move is legal;
        # otherwise it keeps its door role.  Dropping unconditionally
        # strands the two endpoints one cycle edge short.
        if any(
            state.face_borders_outer_ham(embedding.faces[fid])
            for fid in embedding.edge_faces[door]
        ):
            j = state._journal_start()
            try:
                state.add_ham_edge(j, door)
            except CarveError:
                state._rollback(j)
            else:
                state.trace.append(
                    TraceEvent(
                        len(state.trace), "promote", door, -1, ham_edges=(door,), side=side
                    )
                )
                return None
        state.trace.append(TraceEvent(len(state.trace), "drop", door, -1, side=side))
        return None
    try:
        new_h, new_doors = _apply_opening(state, door, face, left_walk)
    except CarveError as open_err:
        if state.roles[door] is EdgeRole.ENTRANCE_DOOR:
            return f"cannot open the entrance face: {open_err}"
        if not state.face_borders_outer_ham(face):
            return f"door {door} face {face.id}: {open_err}"
        j = state._journal_start()
        try:
            state.add_ham_edge(j, door)
        except CarveError as exc:
            state._rollback(j)
            return f"door {door} face {face.id}: promotion failed: {exc}"
        state.enter_face(j, face.id)
        state.trace.append(
            TraceEvent(len(state.trace), "promote", door, face.id, ham_edges=(door,), side=side)
        )
        return None
    for e in new_doors:
        state.frontier.append((e, side))
    state.trace.append(
        TraceEvent(
            len(state.trace), "open", door, face.id,
            ham_edges=new_h, door_edges=new_doors, side=side,
        )
    )
    return None


def select_entrance(
    embedding: PlanarEmbedding, cuts: list | None = None
) -> EntranceChoice:
    """Outer edge admissible under the 3-cut rule.

    An outer edge is excluded when it lies strictly inside one side of a
    nontrivial 3-edge-cut (both endpoints in that side, not a cut
    member).  Being a cut member is allowed but flagged.  If everything
    is excluded, the least-excluded edge is returned with forced=True.
    """
    outer = embedding.outer_face
    if outer.length < 4:
        raise ValueError(f"outer cycle has length {outer.length}, need at least 4")
    cuts = cuts or []
    scored: list[tuple[int, Edge]] = []
    for e in sorted(outer.edges):
        excluded = 0
        for cut in cuts:
            if e in cut.edges:
                continue
            u, v = e
            for side in (cut.side_a, cut.side_b):
                s = set(side)
                if u in s and v in s:
                    excluded += 1
                    break
        scored.append((excluded, e))
    best_excl, best_edge = min(scored)
    cut_member = any(best_edge in cut.edges for cut in cuts)
    return EntranceChoice(
        edge=best_edge,
        excluded_by=best_excl,
        cut_member=cut_member,
        forced=best_excl > 0,
    )


def chamber_count(embedding: PlanarEmbedding, cycle) -> int:
    """Closed regions induced by a Hamiltonian cycle: components of the
    interior cycle edges plus the outer edges the cycle skips."""
    from .oracle import verify_cycle

    cert = verify_cycle(embedding, cycle)
    if not cert.is_hamiltonian:
        raise ValueError("chamber analysis needs a verified Hamiltonian cycle")
    seq = cert.vertices
    cyc_edges = {edge_key(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))}
    outer = embedding.outer_edges
    h_inner = {e for e in cyc_edges if e not in outer}
    entrances = {e for e in outer if e not in cyc_edges}
    chamber_edges = h_inner | entrances
    adj: dict[int, list[int]] = {}
    for u, v in chamber_edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    count = 0
    for s in adj:
        if s in seen:
            continue
        count += 1
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return count
