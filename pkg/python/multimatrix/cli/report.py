"""Flat `key = value` reports.

Layout::

    schema = multimatrix-report/1
    command = gap
    digest = sha256:...
    seed = 0
    alpha = 3
    ...
    [cover_planes]
    line axis=1 fixed=(1,1)
    [end]
    elapsed_ms = 1.742

Every line except the trailing `elapsed_ms` depends only on the input and the
flags, so reports of repeated runs are byte-identical once that line is dropped.
Field and block names share one namespace so a report parses back without loss.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

SCHEMA = "multimatrix-report/1"
TIMING_KEY = "elapsed_ms"
HEADER_KEYS = frozenset({"schema", "command", "digest", "seed", TIMING_KEY})


def _render(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


@dataclass
class Report:
    command: str
    digest: str | None = None
    seed: int | None = None
    fields: list[tuple[str, str]] = field(default_factory=list)
    blocks: list[tuple[str, list[str]]] = field(default_factory=list)
    violation: bool = False
    elapsed_ms: float | None = None

    def _claim(self, name: str) -> None:
        taken = HEADER_KEYS | {k for k, _ in self.fields} | {b for b, _ in self.blocks}
        if name in taken:
            raise ValueError(f"report {self.command!r} already uses the name {name!r}")

    def add(self, key: str, value: object) -> Report:
        self._claim(key)
        self.fields.append((key, _render(value)))
        return self

    def block(self, name: str, lines: Iterable[object]) -> Report:
        self._claim(name)
        self.blocks.append((name, [_render(line) for line in lines]))
        return self

    def get(self, key: str) -> str:
        for k, v in self.fields:
            if k == key:
                return v
        raise KeyError(key)

    def render(self) -> str:
        out = [f"schema = {SCHEMA}", f"command = {self.command}"]
        if self.digest is not None:
            out.append(f"digest = {self.digest}")
        if self.seed is not None:
            out.append(f"seed = {self.seed}")
        out += [f"{key} = {value}" for key, value in self.fields]
        for name, lines in self.blocks:
            out.append(f"[{name}]")
            out += lines
            out.append("[end]")
        if self.elapsed_ms is not None:
            out.append(f"{TIMING_KEY} = {self.elapsed_ms:.3f}")
        return "\n".join(out) + "\n"


def strip_timing(text: str) -> str:
    """Report text without the timing line, for determinism comparisons."""
    return "".join(
        line for line in text.splitlines(keepends=True) if not line.startswith(TIMING_KEY)
    )


def parse_report(text: str) -> dict[str, str | list[str]]:
    """Read a rendered report back into fields and blocks."""
    result: dict[str, str | list[str]] = {}
    block: list[str] | None = None
    for line in text.splitlines():
        if block is not None:
            if line == "[end]":
                block = None
            else:
                block.append(line)
        elif line.startswith("[") and line.endswith("]"):
            block = []
            result[line[1:-1]] = block
        elif " = " in line:
            key, value = line.split(" = ", 1)
            result[key] = value
    return result
