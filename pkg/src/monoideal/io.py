"""Corpus files and JSON emission.

Corpus format::

    vars: x1,x2,x3
    # comment
    name: x1^2, x1*x2

JSON output never contains floats; integers and rationals are written as
strings so that reports are byte-stable.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .core import IdealError, MonomialIdeal, VariableSet, parse_ideal

_NAME = re.compile(r"[A-Za-z0-9][A-Za-z0-9_.\-]*\Z")


class CorpusError(IdealError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class CorpusFile:
    ambient: VariableSet
    entries: dict[str, MonomialIdeal] = field(default_factory=dict)
    # ("comment", text) or ("entry", name), in file order
    layout: list[tuple[str, str]] = field(default_factory=list)

    def add(self, name: str, ideal: MonomialIdeal):
        if name in self.entries:
            raise CorpusError(f"duplicate name {name!r}")
        if ideal.ambient != self.ambient:
            raise CorpusError(f"{name!r} does not live over {self.ambient}")
        self.entries[name] = ideal
        self.layout.append(("entry", name))


def parse_corpus(text: str) -> CorpusFile:
    corpus = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if corpus is None:
                raise CorpusError("the first line must declare vars", lineno)
            corpus.layout.append(("comment", line))
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise CorpusError(f"expected 'name: ideal', got {line!r}", lineno)
        key = key.strip()
        if corpus is None:
            if key != "vars":
                raise CorpusError("the first line must be 'vars: ...'", lineno)
            try:
                corpus = CorpusFile(VariableSet.parse(rest))
            except IdealError as exc:
                raise CorpusError(str(exc), lineno) from None
            continue
        if key == "vars":
            raise CorpusError("vars declared twice", lineno)
        if not _NAME.match(key):
            raise CorpusError(f"bad entry name {key!r}", lineno)
        if key in corpus.entries:
            raise CorpusError(f"duplicate name {key!r}", lineno)
        try:
            corpus.add(key, parse_ideal(rest, corpus.ambient))
        except IdealError as exc:
            raise CorpusError(str(exc), lineno) from None
    if corpus is None:
        raise CorpusError("empty corpus: missing vars header")
    return corpus


def dump_corpus(corpus: CorpusFile) -> str:
    lines = [f"vars: {corpus.ambient}"]
    for kind, value in corpus.layout:
        if kind == "comment":
            lines.append(value)
        else:
            lines.append(f"{value}: {corpus.entries[value]}")
    return "\n".join(lines) + "\n"


def load_corpus(path: str | Path) -> CorpusFile:
    return parse_corpus(Path(path).read_text(encoding="utf-8"))


def bundled_corpus_text() -> str:
    return resources.files("monoideal").joinpath("data/examples.corpus").read_text(encoding="utf-8")


def load_bundled_corpus() -> CorpusFile:
    return parse_corpus(bundled_corpus_text())


def load_schema(name: str) -> dict:
    text = resources.files("monoideal").joinpath(f"schemas/{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def _reject_floats(obj, path="$"):
    if isinstance(obj, float):
        raise TypeError(f"float at {path}; serialize numbers as strings")
    if isinstance(obj, dict):
        for k, v in obj.items():
            _reject_floats(v, f"{path}.{k}")
    elif isinstance(obj, (list, tuple)):
        for k, v in enumerate(obj):
            _reject_floats(v, f"{path}[{k}]")


def emit_report_json(report) -> str:
    """Serialize with sorted keys and a trailing newline; ``report`` may define ``to_json``."""
    obj = report.to_json() if hasattr(report, "to_json") else report
    _reject_floats(obj)
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
