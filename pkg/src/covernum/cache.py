"""Append-only JSONL cache of covering-number decisions.

Each line holds one decision:

    {"n": 12, "covering": true, "certificate": {...}, "rejection": null}

Certificates use the canonical cover serialization; refutations carry
the rejection tag instead.  The file is loaded once at construction and
new decisions are appended as they arrive, so concurrent readers only
ever see complete lines.
"""

from __future__ import annotations

import json
from pathlib import Path

from .systems import CoverSystem


class DecisionCache:
    def __init__(self, path):
        self.path = Path(path)
        self._records: dict[int, dict] = {}
        if self.path.exists():
            with self.path.open(encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    obj = json.loads(line)
                    self._records[obj["n"]] = obj

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, n: int) -> bool:
        return n in self._records

    def get(self, n: int):
        """The cached DecisionRecord for n, or None."""
        obj = self._records.get(n)
        if obj is None:
            return None
        from .decide import DecisionRecord

        cert = obj["certificate"]
        return DecisionRecord(
            n=obj["n"],
            is_covering=obj["covering"],
            certificate=None if cert is None else CoverSystem.from_dict(cert),
            rejection=obj["rejection"],
        )

    def put(self, record) -> None:
        """Persist a decision; re-puts of a cached n are ignored."""
        if record.n in self._records:
            return
        obj = {
            "n": record.n,
            "covering": record.is_covering,
            "certificate": None
            if record.certificate is None
            else record.certificate.canonical().to_dict(),
            "rejection": record.rejection,
        }
        self._records[record.n] = obj
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(obj, separators=(",", ":")) + "\n")
