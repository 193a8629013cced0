"""Line-oriented algebra files: parse, validate, render.

The grammar (blank lines and '#' comments are skipped):

    algebra <name>
    size <n>
    signature <sym>/<arity> ...
    names <n tokens>              (optional element labels)
    class <BL|MV|MTL|naBL|hoop|generic>   (optional)
    note <free text>              (optional)
    table <sym>                   (one block per symbol, in signature order;
    <rows>                         arity k: n**(k-1) rows of n entries,
    ...                            nullary: one row with one entry)
    tau <n entries>               (optional)

Rendering is canonical, so parse(render(doc)) == doc.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteAlgebra, Signature, WorkbenchError
from .state_morphism import StateMorphismAlgebra

KNOWN_CLASSES = ("BL", "MV", "MTL", "naBL", "hoop", "generic")


class ParseError(WorkbenchError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column else "") + ")"
        super().__init__(message + where)


@dataclass(frozen=True)
class AlgebraDocument:
    name: str
    size: int
    signature: Signature
    tables: tuple[tuple[int, ...], ...]
    element_names: tuple[str, ...] | None = None
    tau: tuple[int, ...] | None = None
    alg_class: str | None = None
    note: str | None = None

    def to_algebra(self) -> FiniteAlgebra:
        return FiniteAlgebra(self.signature, self.size, self.tables, self.name)

    def to_state_morphism(self) -> StateMorphismAlgebra | None:
        """The verified expansion when a tau row is present, else None."""
        if self.tau is None:
            return None
        return StateMorphismAlgebra(self.to_algebra(), self.tau, self.name)


def document_from_algebra(
    algebra: FiniteAlgebra,
    element_names=None,
    tau=None,
    alg_class: str | None = None,
    note: str | None = None,
    name: str | None = None,
) -> AlgebraDocument:
    return AlgebraDocument(
        name=name if name is not None else (algebra.name or "unnamed"),
        size=algebra.size,
        signature=algebra.signature,
        tables=algebra.tables,
        element_names=tuple(element_names) if element_names is not None else None,
        tau=tuple(tau) if tau is not None else None,
        alg_class=alg_class,
        note=note,
    )


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


def _parse_int(token: str, lineno: int, col: int, upper: int | None = None) -> int:
    try:
        v = int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno, col)
    if v < 0:
        raise ParseError(f"negative entry {v}", lineno, col)
    if upper is not None and v >= upper:
        raise ParseError(f"entry out of range: {v} (size {upper})", lineno, col)
    return v


def parse_algebra_text(text: str) -> AlgebraDocument:
    lines = list(_logical_lines(text))
    pos = 0

    def peek():
        return lines[pos] if pos < len(lines) else (None, None)

    def take():
        nonlocal pos
        if pos >= len(lines):
            raise ParseError("unexpected end of file", lines[-1][0] if lines else 1)
        item = lines[pos]
        pos += 1
        return item

    lineno, line = take()
    if not line.startswith("algebra "):
        raise ParseError("file must start with 'algebra <name>'", lineno)
    name = line[len("algebra "):].strip()
    if not name:
        raise ParseError("algebra name missing", lineno)

    lineno, line = take()
    parts = line.split()
    if parts[:1] != ["size"] or len(parts) != 2:
        raise ParseError("expected 'size <n>'", lineno)
    size = _parse_int(parts[1], lineno, 2)
    if size <= 0:
        raise ParseError("size must be positive", lineno)

    lineno, line = take()
    parts = line.split()
    if parts[:1] != ["signature"] or len(parts) < 2:
        raise ParseError("expected 'signature <sym>/<arity> ...'", lineno)
    symbols = []
    seen = set()
    for col, token in enumerate(parts[1:], start=2):
        if "/" not in token:
            raise ParseError(f"malformed symbol {token!r}, expected name/arity", lineno, col)
        sym, _, ar = token.rpartition("/")
        if not sym:
            raise ParseError(f"malformed symbol {token!r}", lineno, col)
        if sym in seen:
            raise ParseError(f"duplicate symbol {sym!r}", lineno, col)
        seen.add(sym)
        symbols.append((sym, _parse_int(ar, lineno, col)))
    sig = Signature(tuple(symbols))

    element_names = None
    alg_class = None
    note = None
    tau = None
    tables: dict[str, tuple[int, ...]] = {}

    while True:
        lineno, line = peek()
        if line is None:
            break
        parts = line.split()
        keyword = parts[0]
        if keyword == "names":
            take()
            if element_names is not None:
                raise ParseError("duplicate names row", lineno)
            if len(parts) - 1 != size:
                raise ParseError(
                    f"names row has {len(parts) - 1} entries, expected {size}", lineno
                )
            element_names = tuple(parts[1:])
        elif keyword == "class":
            take()
            if alg_class is not None:
                raise ParseError("duplicate class line", lineno)
            if len(parts) != 2 or parts[1] not in KNOWN_CLASSES:
                raise ParseError(
                    f"expected 'class <{('|'.join(KNOWN_CLASSES))}>'", lineno
                )
            alg_class = parts[1]
        elif keyword == "note":
            take()
            note = line[len("note "):].strip()
        elif keyword == "table":
            take()
            if len(parts) != 2:
                raise ParseError("expected 'table <sym>'", lineno)
            sym = parts[1]
            if sym not in sig:
                raise ParseError(f"table for unknown symbol {sym!r}", lineno)
            if sym in tables:
                raise ParseError(f"duplicate table for {sym!r}", lineno)
            arity = sig.arity(sym)
            rows = 1 if arity == 0 else size ** (arity - 1)
            per_row = 1 if arity == 0 else size
            entries = []
            for _ in range(rows):
                rln, row = take()
                toks = row.split()
                if len(toks) != per_row:
                    raise ParseError(
                        f"table row for {sym!r} has {len(toks)} entries, expected {per_row}",
                        rln,
                    )
                for col, tok in enumerate(toks, start=1):
                    entries.append(_parse_int(tok, rln, col, upper=size))
            tables[sym] = tuple(entries)
        elif keyword == "tau":
            take()
            if tau is not None:
                raise ParseError("duplicate tau row", lineno)
            if len(parts) - 1 != size:
                raise ParseError(
                    f"tau row has {len(parts) - 1} entries, expected {size}", lineno
                )
            tau = tuple(
                _parse_int(tok, lineno, col, upper=size)
                for col, tok in enumerate(parts[1:], start=2)
            )
        else:
            raise ParseError(f"unexpected directive {keyword!r}", lineno)

    missing = [sym for sym, _ in sig.symbols if sym not in tables]
    if missing:
        raise ParseError(f"missing tables for {missing}", lines[-1][0] if lines else 1)

    doc = AlgebraDocument(
        name=name,
        size=size,
        signature=sig,
        tables=tuple(tables[sym] for sym, _ in sig.symbols),
        element_names=element_names,
        tau=tau,
        alg_class=alg_class,
        note=note,
    )
    doc.to_algebra()   # surface structural problems with parse-time semantics
    return doc


def render_algebra(doc: AlgebraDocument) -> str:
    out = [f"algebra {doc.name}", f"size {doc.size}"]
    out.append("signature " + " ".join(f"{s}/{a}" for s, a in doc.signature.symbols))
    if doc.element_names is not None:
        out.append("names " + " ".join(doc.element_names))
    if doc.alg_class is not None:
        out.append(f"class {doc.alg_class}")
    if doc.note is not None:
        out.append(f"note {doc.note}")
    for (sym, arity), table in zip(doc.signature.symbols, doc.tables):
        out.append(f"table {sym}")
        if arity == 0:
            out.append(str(table[0]))
        else:
            per_row = doc.size
            for r in range(len(table) // per_row):
                out.append(" ".join(str(v) for v in table[r * per_row:(r + 1) * per_row]))
    if doc.tau is not None:
        out.append("tau " + " ".join(str(v) for v in doc.tau))
    return "\n".join(out) + "\n"


def parse_algebra_file(path) -> AlgebraDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_text(fh.read())


def write_algebra_file(path, doc: AlgebraDocument) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_algebra(doc))
