"""Built-in test corpus and Cayley table files.

Table format: first line the order n, then n rows of n whitespace-separated indices,
then optionally ``labels: l0 l1 ...``.  Lines starting with ``#`` are comments.
A manifest lists one ``name  descriptor-or-path`` pair per line.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .algebra import FiniteSemigroup
from .errors import OutOfRangeEntry, TableParseError, UnsupportedParameter
from .families import NON_E_SOLID_BAND, make_family


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    semigroup: FiniteSemigroup
    provenance: str   # family descriptor or "file:<path>"

    @property
    def order(self) -> int:
        return self.semigroup.order


class Corpus:
    """Named semigroups with unique names, in insertion order."""

    def __init__(self, entries=()):
        self._entries: list[CorpusEntry] = []
        self._names: dict[str, int] = {}
        for e in entries:
            self.add(e)

    def add(self, entry: CorpusEntry) -> None:
        if entry.name in self._names:
            raise ValueError(f"duplicate corpus name {entry.name!r}")
        self._names[entry.name] = len(self._entries)
        self._entries.append(entry)

    def __iter__(self) -> Iterator[CorpusEntry]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, name: str) -> FiniteSemigroup:
        return self._entries[self._names[name]].semigroup

    def __contains__(self, name: str) -> bool:
        return name in self._names

    @property
    def names(self) -> list[str]:
        return [e.name for e in self._entries]

    def up_to(self, order: int) -> Corpus:
        return Corpus(e for e in self._entries if e.order <= order)

    def where(self, pred) -> Corpus:
        return Corpus(e for e in self._entries if pred(e.semigroup))


BUILTIN_DESCRIPTORS: tuple[str, ...] = (
    *(f"Zn:{n}" for n in range(1, 7)),
    *(f"chain:{k}" for k in range(2, 5)),
    "null:2", "null:3", "null:2 x null:2",
    "lz:2", "lz:3", "rz:2", "rz:3", "lz:2 x rz:2",
    *(f"mono:{i},{p}" for i in range(1, 4) for p in range(1, 4)),
    "brandt:2", "brandt:3",
    "btrunc:1", "btrunc:2", "btrunc:3",
    NON_E_SOLID_BAND,
    "T:2", "T:3", "U3",
    "Zn:2 x chain:2", "Zn:2 x lz:2", "chain:2 x rz:2", "Zn:2 x Zn:2", "Zn:3 x chain:2",
    "brandt:2 x Zn:2", "chain:2 x null:2", "lz:2 x Zn:3",
)


def builtin_corpus() -> Corpus:
    """Deterministic curated corpus; names are the family descriptors."""
    return Corpus(CorpusEntry(d, make_family(d), d) for d in BUILTIN_DESCRIPTORS)


# ---------------------------------------------------------------------------
# table files

def parse_table(text: str, origin: str = "<string>") -> FiniteSemigroup:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln and not ln.startswith("#")]
    if not lines:
        raise TableParseError(f"{origin}: empty table file")
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise TableParseError(f"{origin}:{lineno}: expected the order, found {first!r}") from None
    if n < 1:
        raise TableParseError(f"{origin}:{lineno}: order must be positive")
    body = lines[1:]
    labels = None
    if body and body[-1][1].startswith("labels:"):
        labels = body[-1][1][len("labels:"):].split()
        body = body[:-1]
        if len(labels) != n:
            raise TableParseError(f"{origin}: {len(labels)} labels for order {n}")
    if len(body) != n:
        raise TableParseError(f"{origin}: expected {n} table rows, found {len(body)}")
    table = []
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != n:
            raise TableParseError(f"{origin}:{lineno}: expected {n} entries, found {len(parts)}")
        try:
            table.append([int(p) for p in parts])
        except ValueError:
            raise TableParseError(f"{origin}:{lineno}: non-integer entry") from None
    try:
        return FiniteSemigroup(table, labels)
    except OutOfRangeEntry as exc:
        raise TableParseError(f"{origin}: {exc}") from exc


def load_table(path: str | os.PathLike) -> FiniteSemigroup:
    """Read and validate a table file; NonAssociative propagates with its triple."""
    return parse_table(Path(path).read_text(), str(path))


def format_table(S: FiniteSemigroup) -> str:
    width = len(str(S.order - 1))
    out = [str(S.order)]
    out += [" ".join(str(v).rjust(width) for v in row) for row in S.rows]
    if S.labels is not None:
        if any(not lbl or any(ch.isspace() for ch in lbl) for lbl in S.labels):
            raise ValueError("labels containing whitespace cannot be written to a table file")
        out.append("labels: " + " ".join(S.labels))
    return "\n".join(out) + "\n"


def write_table(S: FiniteSemigroup, path: str | os.PathLike) -> None:
    Path(path).write_text(format_table(S))


# ---------------------------------------------------------------------------
# manifests and single-semigroup specs

def resolve_semigroup(spec: str, base: str | os.PathLike | None = None
                      ) -> tuple[FiniteSemigroup, str]:
    """A family descriptor or a table file path; returns the semigroup and provenance."""
    spec = spec.strip()
    path = Path(base, spec) if base is not None else Path(spec)
    if path.is_file():
        return load_table(path), f"file:{path}"
    try:
        return make_family(spec), spec
    except UnsupportedParameter:
        if os.sep in spec or spec.endswith(".txt") or spec.endswith(".tbl"):
            raise TableParseError(f"no such table file: {spec}") from None
        raise


def load_manifest(path: str | os.PathLike) -> Corpus:
    path = Path(path)
    corpus = Corpus()
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        ln = raw.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split(None, 1)
        if len(parts) != 2:
            raise TableParseError(f"{path}:{lineno}: expected 'name descriptor-or-path'")
        name, spec = parts
        S, prov = resolve_semigroup(spec, path.parent if not Path(spec).is_absolute() else None)
        corpus.add(CorpusEntry(name, S, prov))
    return corpus
