"""Certificate serialization: a plain text format and a JSON document format.

Text: one congruence per line as ``<residue> mod <modulus>``, ascending
modulus, with an optional leading header ``n = <decimal>``.  JSON: a single
document carrying n, its factorization, and the congruences, with all
unbounded integers rendered as decimal strings so any consumer can read
them exactly.  ``parse_*`` and ``emit_*`` are mutual inverses on canonical
certificates.
"""

from __future__ import annotations

import json
import re

from .arith import factorize
from .model import Congruence, CongruenceAssignment

FORMAT_VERSION = 1

_LINE = re.compile(r"^(\d+)\s+mod\s+(\d+)$")
_HEADER = re.compile(r"^n\s*=\s*(\d+)$")


class CertificateParseError(ValueError):
    """The input is not a well-formed certificate."""


def emit_text(assignment: CongruenceAssignment, include_header: bool = True) -> str:
    lines = [f"n = {assignment.n}"] if include_header else []
    lines.extend(str(c) for c in assignment.congruences())
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> tuple[int | None, list[Congruence]]:
    """Parse the text format; returns (embedded n or None, congruences).

    Blank lines are ignored.  Duplicate moduli and any unrecognized line
    are parse errors.
    """
    n: int | None = None
    entries: list[Congruence] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        header = _HEADER.match(line)
        if header:
            if n is not None:
                raise CertificateParseError(f"line {lineno}: repeated n header")
            n = int(header.group(1))
            continue
        m = _LINE.match(line)
        if not m:
            raise CertificateParseError(f"line {lineno}: expected '<residue> mod <modulus>'")
        residue, modulus = int(m.group(1)), int(m.group(2))
        if modulus < 2:
            raise CertificateParseError(f"line {lineno}: modulus must exceed 1")
        if residue >= modulus:
            raise CertificateParseError(f"line {lineno}: residue {residue} not below modulus {modulus}")
        if modulus in seen:
            raise CertificateParseError(f"line {lineno}: duplicate modulus {modulus}")
        seen.add(modulus)
        entries.append(Congruence(residue, modulus))
    return n, entries


def emit_json(assignment: CongruenceAssignment, factor_budget: int | None = None) -> str:
    doc = {
        "format_version": FORMAT_VERSION,
        "n": str(assignment.n),
        "factorization": [
            [str(p), e] for p, e in factorize(assignment.n, budget=factor_budget).pairs
        ],
        "congruences": [
            {"modulus": str(c.modulus), "residue": str(c.residue)}
            for c in assignment.congruences()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_json(text: str) -> CongruenceAssignment:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise CertificateParseError("top-level JSON value must be an object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise CertificateParseError(f"unsupported format_version {doc.get('format_version')!r}")
    try:
        n = int(doc["n"])
        raw = [(int(c["modulus"]), int(c["residue"])) for c in doc["congruences"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateParseError(f"malformed certificate document: {exc}") from None
    entries: dict[int, int] = {}
    for modulus, residue in raw:
        if modulus < 2:
            raise CertificateParseError(f"modulus {modulus} must exceed 1")
        if not 0 <= residue < modulus:
            raise CertificateParseError(f"residue {residue} not canonical modulo {modulus}")
        if modulus in entries:
            raise CertificateParseError(f"duplicate modulus {modulus}")
        entries[modulus] = residue
    if n < 1:
        raise CertificateParseError(f"n must be >= 1, got {n}")
    return CongruenceAssignment(n, entries)
