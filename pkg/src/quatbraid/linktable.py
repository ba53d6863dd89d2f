"""Bundled table of links given as braid closures with optional Seifert matrices."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from quatbraid.braids import BraidWord


@dataclass(frozen=True)
class LinkEntry:
    name: str
    braid: BraidWord
    seifert: tuple[tuple[int, ...], ...] | None

    @property
    def seifert_rows(self) -> list[list[int]] | None:
        if self.seifert is None:
            return None
        return [list(r) for r in self.seifert]


def _parse(data: dict) -> list[LinkEntry]:
    if data.get("schema") != "quatbraid-link-table-v1":
        raise ValueError("unrecognized link-table schema")
    entries = []
    for raw in data["links"]:
        seifert = raw.get("seifert")
        entries.append(
            LinkEntry(
                name=raw["name"],
                braid=BraidWord(raw["strands"], tuple(raw["word"])),
                seifert=None if seifert is None else tuple(tuple(r) for r in seifert),
            )
        )
    return entries


def load_bundled() -> list[LinkEntry]:
    text = resources.files("quatbraid").joinpath("data/links.json").read_text()
    return _parse(json.loads(text))


def load_file(path: str | Path) -> list[LinkEntry]:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(f"link table not found: {p}")
    return _parse(json.loads(p.read_text()))
