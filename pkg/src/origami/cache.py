"""Optional on-disk persistence for the character and Jack memo tables.

A single text file with a versioned header line; one record per line,
tab-separated, JSON-encoded fields (endian-independent by construction).
Unknown versions or malformed records are ignored rather than trusted.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from . import characters, jack
from .symfunc import SymFunc

HEADER = "origami-cache 1"
FILENAME = "origami-cache.txt"


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_fraction(s: str) -> Fraction:
    num, den = s.split("/")
    return Fraction(int(num), int(den))


def cache_path(directory: str) -> str:
    return os.path.join(directory, FILENAME)


def save(directory: str) -> None:
    os.makedirs(directory, exist_ok=True)
    lines = [HEADER]
    for (lam, mu), value in sorted(characters.character_cache_items()):
        lines.append(f"chi\t{json.dumps(list(lam))}\t{json.dumps(list(mu))}\t{value}")
    for _, alpha, lam, jp in sorted(
        jack.jack_cache_items(), key=lambda r: (r[0], r[1], r[2])
    ):
        record = {
            "alpha": _fraction_str(alpha),
            "index": list(lam),
            "m": jp.expansion_m.to_json_dict(),
            "p": jp.expansion_p.to_json_dict(),
        }
        lines.append("jack\t" + json.dumps(record, sort_keys=True))
    tmp = cache_path(directory) + ".tmp"
    with open(tmp, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, cache_path(directory))


def load(directory: str) -> int:
    """Load cached values; returns the number of records accepted."""
    path = cache_path(directory)
    if not os.path.exists(path):
        return 0
    with open(path) as fh:
        header = fh.readline().rstrip("\n")
        if header != HEADER:
            return 0
        accepted = 0
        for line in fh:
            parts = line.rstrip("\n").split("\t")
            try:
                if parts[0] == "chi" and len(parts) == 4:
                    lam = tuple(json.loads(parts[1]))
                    mu = tuple(json.loads(parts[2]))
                    characters.character_cache_insert(lam, mu, int(parts[3]))
                    accepted += 1
                elif parts[0] == "jack" and len(parts) == 2:
                    rec = json.loads(parts[1])
                    jp = jack.JackPolynomial(
                        tuple(rec["index"]),
                        _parse_fraction(rec["alpha"]),
                        SymFunc.from_json_dict(rec["m"]),
                        SymFunc.from_json_dict(rec["p"]),
                    )
                    jack.jack_cache_insert(jp)
                    accepted += 1
            except (ValueError, KeyError, json.JSONDecodeError):
                continue
    return accepted
