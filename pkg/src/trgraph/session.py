"""Interactive exploration sessions: a single-letter command protocol over
a mutable core-plus-chordal-paths workspace.

Commands (vertex and path numbering start at 0):

    g n u1 v1 u2 v2 ...   set the core: n vertices and the listed edges
    g6 CODE               set the core from a graph6 code
    a u v s               add a chordal path with s internal vertices
    d INDEX               delete the chordal path with that index
    c                     clear all chordal paths
    x                     close the session

After every state change the session re-renders: one "Vertex i: t" line
per core vertex, one "Arc j (u v s): t1 ... ts" line per path (positions
counted from the endpoint listed first), then the spectrum line.  Unlike
the reference tool this parser validates arity and ranges and reports
errors without ever leaving the session.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chordal import ChordalPath, CoreWithPaths, fast_transmissions
from .classify import TransmissionSpectrum, classify, spectrum_string
from .distances import DisconnectedGraphError, TransmissionProfile
from .graphs import Graph, Graph6Error, parse_graph6

VERBS = ("G", "G6", "A", "D", "C", "X")


class CommandError(ValueError):
    """One-line diagnostic for a rejected command; the session survives."""


@dataclass(frozen=True)
class Command:
    verb: str
    core_n: int = 0
    edges: tuple = ()
    code: str = ""
    path: ChordalPath | None = None
    index: int = -1


def parse_command(line: str) -> Command:
    """Parse one command line, enforcing arity and value ranges.

    Core-range checks for `a` and `d` happen at application time, where
    the workspace is known.
    """
    tokens = line.split()
    if not tokens:
        raise CommandError("empty command")
    verb = tokens[0].lower()
    args = tokens[1:]
    if verb == "g":
        if not args:
            raise CommandError("usage: g n u1 v1 u2 v2 ...")
        nums = _ints(args)
        n, rest = nums[0], nums[1:]
        if n < 0:
            raise CommandError(f"vertex count must be nonnegative, got {n}")
        if len(rest) % 2:
            raise CommandError("edge list must have an even number of vertex ids")
        edges = list(zip(rest[::2], rest[1::2]))
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise CommandError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise CommandError(f"self-loop at vertex {u} not allowed")
        return Command("G", core_n=n, edges=tuple(edges))
    if verb == "g6":
        if len(args) != 1:
            raise CommandError("usage: g6 CODE")
        return Command("G6", code=args[0])
    if verb == "a":
        if len(args) != 3:
            raise CommandError("usage: a u v s")
        u, v, s = _ints(args)
        if s < 0:
            raise CommandError(f"internal vertex count must be nonnegative, got {s}")
        if u == v and s < 2:
            raise CommandError("a path from a vertex to itself needs at least 2 internal vertices")
        return Command("A", path=ChordalPath(u, v, s))
    if verb == "d":
        if len(args) != 1:
            raise CommandError("usage: d index")
        return Command("D", index=_ints(args)[0])
    if verb in ("c", "x"):
        if args:
            raise CommandError(f"'{verb}' takes no arguments")
        return Command(verb.upper())
    raise CommandError(f"unknown command {tokens[0]!r}")


def _ints(tokens) -> list[int]:
    values = []
    for t in tokens:
        try:
            values.append(int(t))
        except ValueError:
            raise CommandError(f"expected an integer, got {t!r}") from None
    return values


@dataclass
class RenderedState:
    lines: list = field(default_factory=list)
    connected: bool = True
    profile: TransmissionProfile | None = None
    spectrum: TransmissionSpectrum | None = None
    spectrum_text: str = ""


class Session:
    """Mutable workspace with a cached profile, recomputed on every change.

    State lives in memory; pass `log_path` for an append-only command log
    from which a session replays deterministically (`Session.replay`).
    """

    def __init__(self, session_id: str = "", core: Graph | None = None,
                 log_path: str | None = None):
        self.id = session_id
        self.workspace = CoreWithPaths(core if core is not None else Graph(0), ())
        self.history: list[str] = []
        self.closed = False
        self.log_path = log_path
        self.rendered = RenderedState(lines=[], connected=True)
        self._refresh()

    @classmethod
    def replay(cls, lines, session_id: str = "replay") -> "Session":
        """Rebuild a session from a command log, skipping rejected lines."""
        session = cls(session_id)
        for line in lines:
            line = line.strip()
            if not line:
                continue
            try:
                session.apply_line(line)
            except CommandError:
                continue
        return session

    @property
    def core(self) -> Graph:
        return self.workspace.core

    @property
    def paths(self) -> tuple:
        return self.workspace.paths

    def apply_line(self, line: str) -> RenderedState:
        """Parse and apply one command; raises CommandError on bad input
        (leaving the workspace unchanged)."""
        cmd = parse_command(line)
        result = self.apply(cmd)
        self.history.append(line)
        if self.log_path:
            with open(self.log_path, "a") as fh:
                fh.write(line.rstrip("\n") + "\n")
        return result

    def load_workspace(self, workspace: CoreWithPaths, note: str = "") -> RenderedState:
        """Replace the whole workspace (used by the family picker)."""
        if self.closed:
            raise CommandError("session is closed")
        self.workspace = workspace
        if note:
            self.history.append(note)
        return self._refresh()

    def apply(self, cmd: Command) -> RenderedState:
        if self.closed:
            raise CommandError("session is closed")
        if cmd.verb == "G":
            self.workspace = CoreWithPaths(Graph(cmd.core_n, cmd.edges), ())
        elif cmd.verb == "G6":
            try:
                self.workspace = CoreWithPaths(parse_graph6(cmd.code), ())
            except Graph6Error as exc:
                raise CommandError(f"bad graph6 code: {exc}") from None
        elif cmd.verb == "A":
            p = cmd.path
            n = self.core.n
            if not (0 <= p.u < n and 0 <= p.v < n):
                raise CommandError(f"path endpoints ({p.u}, {p.v}) out of range for {n} vertices")
            self.workspace = CoreWithPaths(self.core, self.paths + (p,))
        elif cmd.verb == "D":
            if not 0 <= cmd.index < len(self.paths):
                raise CommandError(
                    f"no chordal path with index {cmd.index} (have {len(self.paths)})"
                )
            remaining = self.paths[:cmd.index] + self.paths[cmd.index + 1:]
            self.workspace = CoreWithPaths(self.core, remaining)
        elif cmd.verb == "C":
            self.workspace = CoreWithPaths(self.core, ())
        elif cmd.verb == "X":
            self.closed = True
            return self.rendered
        return self._refresh()

    def _refresh(self) -> RenderedState:
        lines: list[str] = []
        n = self.core.n
        if n == 0:
            self.rendered = RenderedState(["(no core set)"], connected=True)
            return self.rendered
        try:
            profile = fast_transmissions(self.workspace)
        except DisconnectedGraphError as exc:
            u, v = exc.witness
            self.rendered = RenderedState(
                [f"Workspace is disconnected: no walk between vertices {u} and {v}"],
                connected=False,
            )
            return self.rendered
        for v in range(n):
            lines.append(f"Vertex {v}: {profile[v]}")
        offset = n
        for j, p in enumerate(self.paths):
            values = " ".join(str(profile[offset + i]) for i in range(p.s))
            lines.append(f"Arc {j} ({p.u} {p.v} {p.s}):" + (f" {values}" if values else ""))
            offset += p.s
        spectrum = classify(profile)
        text = spectrum_string(spectrum)
        lines.append(text)
        self.rendered = RenderedState(lines, True, profile, spectrum, text)
        return self.rendered


def run_repl(stdin=None, stdout=None, log_path: str | None = None) -> None:
    """Terminal loop: read commands, print the rendered block after each
    state change, report errors in one line, never crash on bad input."""
    import sys

    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    interactive = hasattr(stdin, "isatty") and stdin.isatty()
    session = Session("repl", log_path=log_path)
    while True:
        if interactive:
            stdout.write(">>")
            stdout.flush()
        line = stdin.readline()
        if not line:
            break
        if not line.strip():
            continue
        try:
            rendered = session.apply_line(line)
        except CommandError as exc:
            stdout.write(f"error: {exc}\n")
            stdout.flush()
            continue
        if session.closed:
            break
        stdout.write("\n".join(rendered.lines) + "\n")
        stdout.flush()
