"""Plain-text complex documents.

A document is a sequence of lines::

    # comments start with '#'
    n=12 d=3 group=cyclic
    1 2 3 4 | size=12        <- orbit line: representative and orbit size
    1 5 7 9                  <- facet line

The header is optional. Orbit lines require ``group`` and ``n`` in the header
and are expanded with the corresponding action; they may carry an ``orbit``
prefix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .complex import SimplicialComplex, face, format_face
from .symmetry import GroupSpec, OrbitGenerator, OrbitSizeError, expand_orbit


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class ComplexDocument:
    n: int | None = None
    d: int | None = None
    group: str | None = None
    orbits: list[OrbitGenerator] = field(default_factory=list)
    facets: list[tuple[int, ...]] = field(default_factory=list)

    def to_complex(self) -> SimplicialComplex:
        masks = [face(f) for f in self.facets]
        if self.orbits:
            spec = GroupSpec(self.group, self.n)
            for o in self.orbits:
                masks.extend(expand_orbit(o, spec))
        c = SimplicialComplex.from_facets(masks, n=self.n)
        if self.d is not None and c.dim != self.d:
            raise ValueError(f"header says d={self.d} but facets have dimension {c.dim}")
        return c


_HEADER_KEY = re.compile(r"^(n|d|group)=(\S+)$")


def parse_document(text: str) -> ComplexDocument:
    doc = ComplexDocument()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if all(_HEADER_KEY.match(t) for t in tokens):
            for t in tokens:
                key, value = t.split("=", 1)
                if key == "group":
                    if value not in ("cyclic", "dihedral"):
                        raise ParseError(lineno, f"unknown group {value!r}")
                    doc.group = value
                else:
                    try:
                        setattr(doc, key, int(value))
                    except ValueError:
                        raise ParseError(lineno, f"{key} must be an integer, got {value!r}") from None
            continue
        if tokens[0] == "orbit":
            tokens = tokens[1:]
            line = " ".join(tokens)
            if "|" not in line:
                line += " |"
        if "|" in line:
            left, right = line.split("|", 1)
            labels = _labels(left, lineno, doc)
            size = None
            right = right.strip()
            if right:
                m = re.fullmatch(r"size=(\d+)", right)
                if not m:
                    raise ParseError(lineno, f"expected 'size=<int>' after '|', got {right!r}")
                size = int(m.group(1))
            if doc.group is None or doc.n is None:
                raise ParseError(lineno, "orbit line needs 'group=' and 'n=' in the header")
            gen = OrbitGenerator(labels, size)
            try:
                expand_orbit(gen, GroupSpec(doc.group, doc.n))
            except OrbitSizeError as exc:
                raise ParseError(lineno, str(exc)) from None
            doc.orbits.append(gen)
            continue
        doc.facets.append(_labels(line, lineno, doc))
    if not doc.facets and not doc.orbits:
        raise ParseError(0, "document contains no facets")
    return doc


def _labels(text: str, lineno: int, doc: ComplexDocument) -> tuple[int, ...]:
    try:
        labels = tuple(int(t) for t in text.split())
    except ValueError:
        raise ParseError(lineno, f"malformed face {text.strip()!r}") from None
    if not labels:
        raise ParseError(lineno, "empty face")
    if len(set(labels)) != len(labels):
        raise ParseError(lineno, f"repeated vertex in {labels}")
    for v in labels:
        if v < 1 or (doc.n is not None and v > doc.n):
            raise ParseError(lineno, f"label {v} out of range")
    return labels


def parse_complex(text: str) -> SimplicialComplex:
    return parse_document(text).to_complex()


def serialize_complex(c: SimplicialComplex) -> str:
    lines = [f"n={c.n} d={c.dim}"]
    lines += [format_face(face(f)) for f in c.sorted_facets()]
    return "\n".join(lines) + "\n"


def serialize_orbits(gens, group: GroupSpec, d: int | None = None) -> str:
    head = f"n={group.n}" + (f" d={d}" if d is not None else "") + f" group={group.kind}"
    lines = [head]
    for g in gens:
        size = g.declared_size if g.declared_size is not None else len(expand_orbit(g, group))
        lines.append(f"{' '.join(map(str, g.representative))} | size={size}")
    return "\n".join(lines) + "\n"


def read_complex(path: str) -> SimplicialComplex:
    import sys

    if path == "-":
        return parse_complex(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())
