"""Reader and writer for the RevLib ``.real`` circuit format.

Line-oriented UTF-8 text: ``#`` comments, header directives, then one gate
per line between ``.begin`` and ``.end``. Gate mnemonics ``t<k>`` name k-1
controls and a target (t1=NOT, t2=CNOT, t3=Toffoli, k>=4 MCT); ``f2`` is the
two-line SWAP. Negative controls and wider Fredkin gates are rejected: the
downstream SWAP accounting is only defined for positive-control NCT gates.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass
from pathlib import Path

from .circuit import Circuit, Gate, GateKind, Line

_DIRECTIVES = {
    ".version", ".numvars", ".variables", ".inputs", ".outputs",
    ".constants", ".garbage", ".begin", ".end",
}


class ParseError(Exception):
    """A ``.real`` document violation, located by 1-based line number."""

    def __init__(self, line_number: int, message: str, token: str | None = None):
        self.line_number = line_number
        self.message = message
        self.token = token
        at = f" (at {token!r})" if token is not None else ""
        super().__init__(f"line {line_number}: {message}{at}")


@dataclass(frozen=True)
class RealHeader:
    """Parsed header directives of a ``.real`` document."""

    version: str
    numvars: int
    variables: tuple[str, ...]
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    constants: str
    garbage: str


def parse_real(text: str) -> Circuit:
    """Parse a ``.real`` document into a Circuit."""
    return parse_real_document(text)[1]


def parse_real_document(text: str) -> tuple[RealHeader, Circuit]:
    parser = _Parser()
    for number, raw in enumerate(text.splitlines(), start=1):
        parser.feed(number, raw)
    return parser.finish()


def load_real(path) -> Circuit:
    return parse_real(Path(path).read_text(encoding="utf-8"))


class _Parser:
    def __init__(self):
        self.version = "1.0"
        self.numvars: int | None = None
        self.variables: tuple[str, ...] | None = None
        self.inputs: tuple[str, ...] | None = None
        self.outputs: tuple[str, ...] | None = None
        self.constants: str | None = None
        self.garbage: str | None = None
        self.index: dict[str, int] = {}
        self.gates: list[Gate] = []
        self.in_body = False
        self.ended = False
        self.last_line = 0

    def feed(self, number: int, raw: str) -> None:
        self.last_line = number
        line = raw.split("#", 1)[0].strip()
        if not line:
            return
        if self.ended:
            raise ParseError(number, "content after .end", line.split()[0])
        if line.startswith("."):
            self._directive(number, line)
        else:
            self._gate(number, line)

    # --- directives -----------------------------------------------------

    def _directive(self, number: int, line: str) -> None:
        name, _, rest = line.partition(" ")
        rest = rest.strip()
        if name not in _DIRECTIVES:
            raise ParseError(number, f"unknown directive {name}", name)
        if self.in_body and name != ".end":
            raise ParseError(number, f"{name} not allowed inside the gate section", name)
        if name == ".version":
            self.version = rest or self.version
        elif name == ".numvars":
            if self.numvars is not None:
                raise ParseError(number, "duplicate .numvars", rest)
            try:
                self.numvars = int(rest)
            except ValueError:
                raise ParseError(number, "invalid .numvars value", rest) from None
            if self.numvars < 1:
                raise ParseError(number, ".numvars must be positive", rest)
        elif name == ".variables":
            self._need_numvars(number, name)
            names = rest.split()
            if len(names) != self.numvars:
                raise ParseError(number, f".variables lists {len(names)} names for {self.numvars} lines")
            for v in names:
                if v.startswith("-"):
                    raise ParseError(number, "invalid variable name", v)
                if v in self.index:
                    raise ParseError(number, "duplicate variable name", v)
                self.index[v] = len(self.index)
            self.variables = tuple(names)
        elif name in (".inputs", ".outputs"):
            self._need_numvars(number, name)
            try:
                names = tuple(shlex.split(rest))
            except ValueError as exc:
                raise ParseError(number, f"bad {name} list: {exc}") from None
            if len(names) != self.numvars:
                raise ParseError(number, f"{name} lists {len(names)} names for {self.numvars} lines")
            setattr(self, name[1:], names)
        elif name == ".constants":
            self._per_line_chars(number, name, rest, "01-")
            self.constants = rest
        elif name == ".garbage":
            self._per_line_chars(number, name, rest, "1-")
            self.garbage = rest
        elif name == ".begin":
            self._need_numvars(number, name)
            if self.variables is None:
                # headerless variables: synthesize x0..x{n-1}
                self.variables = tuple(f"x{i}" for i in range(self.numvars))
                self.index = {v: i for i, v in enumerate(self.variables)}
            self.in_body = True
        elif name == ".end":
            if not self.in_body:
                raise ParseError(number, ".end before .begin")
            self.in_body = False
            self.ended = True

    def _need_numvars(self, number: int, name: str) -> None:
        if self.numvars is None:
            raise ParseError(number, f"{name} before .numvars")

    def _per_line_chars(self, number: int, name: str, rest: str, alphabet: str) -> None:
        self._need_numvars(number, name)
        if len(rest) != self.numvars or any(ch not in alphabet for ch in rest):
            raise ParseError(number, f"{name} needs {self.numvars} chars from '{alphabet}'", rest)

    # --- gates ----------------------------------------------------------

    def _gate(self, number: int, line: str) -> None:
        if not self.in_body:
            raise ParseError(number, "gate before .begin", line.split()[0])
        tokens = line.split()
        mnemonic, args = tokens[0], tokens[1:]
        width = self._gate_width(number, mnemonic)
        if len(args) != width:
            raise ParseError(number, f"{mnemonic} names {width} lines, got {len(args)}", mnemonic)
        lines = []
        for tok in args:
            if tok.startswith("-"):
                raise ParseError(number, "negative controls are not supported", tok)
            if tok not in self.index:
                raise ParseError(number, "undeclared variable", tok)
            q = self.index[tok]
            if q in lines:
                raise ParseError(number, "gate references a line twice", tok)
            lines.append(q)
        if mnemonic.startswith("f"):
            self.gates.append(Gate.swap(lines[0], lines[1]))
        else:
            self.gates.append(Gate.mcx(lines[:-1], lines[-1]))

    def _gate_width(self, number: int, mnemonic: str) -> int:
        kind, digits = mnemonic[:1], mnemonic[1:]
        if kind in ("t", "f") and digits.isdigit():
            width = int(digits)
            if kind == "f" and width != 2:
                raise ParseError(number, "only the 2-line SWAP form f2 is supported", mnemonic)
            if width < 1:
                raise ParseError(number, "gate must touch at least one line", mnemonic)
            return width
        raise ParseError(number, f"unknown gate mnemonic {mnemonic}", mnemonic)

    # --- assembly ---------------------------------------------------------

    def finish(self) -> tuple[RealHeader, Circuit]:
        if self.numvars is None:
            raise ParseError(self.last_line + 1, "missing .numvars")
        if self.in_body or not self.ended:
            raise ParseError(self.last_line + 1, "missing .end")
        assert self.variables is not None
        constants = self.constants or "-" * self.numvars
        garbage = self.garbage or "-" * self.numvars
        header = RealHeader(
            self.version, self.numvars, self.variables,
            self.inputs or self.variables, self.outputs or self.variables,
            constants, garbage,
        )
        lines = tuple(
            Line(name, constant=None if c == "-" else int(c), garbage=g == "1")
            for name, c, g in zip(self.variables, constants, garbage)
        )
        return header, Circuit(self.numvars, tuple(self.gates), lines)


# --- writing ------------------------------------------------------------


def write_real(circuit: Circuit) -> str:
    """Emit a ``.real`` document; parse_real(write_real(c)) == c."""
    names = [ln.name for ln in circuit.lines]
    for name in names:
        if not name or name.startswith("-") or name.startswith(".") or len(name.split()) != 1:
            raise ValueError(f"line name {name!r} cannot be written to .real")
    out = [
        ".version 2.0",
        f".numvars {circuit.num_lines}",
        ".variables " + " ".join(names),
        ".inputs " + " ".join(names),
        ".outputs " + " ".join(names),
        ".constants " + "".join("-" if ln.constant is None else str(ln.constant) for ln in circuit.lines),
        ".garbage " + "".join("1" if ln.garbage else "-" for ln in circuit.lines),
        ".begin",
    ]
    for gate in circuit.gates:
        mnemonic = "f2" if gate.kind is GateKind.SWAP else f"t{len(gate.controls) + 1}"
        out.append(" ".join([mnemonic, *(names[q] for q in gate.lines())]))
    out.append(".end")
    return "\n".join(out) + "\n"


def save_real(path, circuit: Circuit) -> None:
    Path(path).write_text(write_real(circuit), encoding="utf-8")
