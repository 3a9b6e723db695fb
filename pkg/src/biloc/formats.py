"""Line-oriented text formats for lattices, bilocales, bispaces and maps.

A file holds any number of blocks; later blocks may reference earlier
ones by name (``use`` in bilocale blocks, endpoint names in map blocks).
``#`` starts a comment when it opens a line or follows whitespace, so
synthesized labels such as ``theta_S#3`` survive a round trip.  Every
serializer emits structures the parser reads back to equal structures.
"""

from __future__ import annotations

import re

from . import kernel
from .bilocales import Bilocale, validate_bilocale
from .bispaces import build_bispace
from .errors import BilocError, ParseError
from .lattice import FiniteLattice, build_lattice
from .maps import BilocalicMap, bilocalic_map, localic_map

_COMMENT = re.compile(r"(?:^|\s)#.*$")


def _strip(line):
    return _COMMENT.sub("", line).strip()


class Document:
    """Parsed file contents, in declaration order."""

    def __init__(self):
        self.order = []          # (kind, name)
        self.items = {}          # name -> structure

    def add(self, kind, name, value, lineno):
        if name in self.items:
            raise ParseError(lineno, f"duplicate structure name {name!r}")
        self.order.append((kind, name))
        self.items[name] = value

    def last(self, kinds):
        for kind, name in reversed(self.order):
            if kind in kinds:
                return self.items[name]
        return None

    def __getitem__(self, name):
        return self.items[name]

    def structures(self):
        return [(kind, name, self.items[name]) for kind, name in self.order]


def parse_text(text, max_elements=None):
    """Parse a document; raises ParseError with a line number on bad input."""
    lines = text.splitlines()
    doc = Document()
    i = 0
    while i < len(lines):
        raw = _strip(lines[i])
        if not raw:
            i += 1
            continue
        head = raw.split()
        kind = head[0]
        if kind == "lattice":
            name, lat, i = _parse_lattice(lines, i, max_elements)
            doc.add("lattice", name, lat, i)
        elif kind == "bilocale":
            name, b, i = _parse_bilocale(lines, i, doc, max_elements)
            doc.add("bilocale", name, b, i)
        elif kind == "bispace":
            name, sp, i = _parse_bispace(lines, i)
            doc.add("bispace", name, sp, i)
        elif kind == "map":
            name, f, i = _parse_map(lines, i, doc)
            doc.add("map", name, f, i)
        else:
            raise ParseError(i + 1, f"unknown block keyword {kind!r}")
    return doc


def parse_file(path, max_elements=None):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_text(fh.read(), max_elements=max_elements)


def _block_name(head, lineno, keyword):
    if len(head) != 2:
        raise ParseError(lineno, f"expected '{keyword} NAME'")
    return head[1]


def _parse_lattice(lines, i, max_elements):
    lineno = i + 1
    name = _block_name(_strip(lines[i]).split(), lineno, "lattice")
    elements = None
    pairs = []
    i += 1
    while i < len(lines):
        raw = _strip(lines[i])
        i += 1
        if not raw:
            continue
        parts = raw.split()
        if parts[0] == "end":
            if elements is None:
                raise ParseError(i, f"lattice {name}: no elements line")
            try:
                kwargs = {} if max_elements is None else \
                    {"max_elements": max_elements}
                return name, build_lattice(elements, pairs, name=name,
                                           **kwargs), i
            except BilocError:
                raise
            except ValueError as exc:
                raise ParseError(i, str(exc)) from None
        if parts[0] == "elements":
            elements = parts[1:]
        elif parts[0] == "order":
            for tok in parts[1:]:
                if "<=" not in tok:
                    raise ParseError(i, f"order entry {tok!r} lacks '<='")
                lo, hi = tok.split("<=", 1)
                pairs.append((lo, hi))
        else:
            raise ParseError(i, f"unexpected line in lattice block: {raw!r}")
    raise ParseError(i, f"lattice {name}: missing 'end'")


def _parse_bilocale(lines, i, doc, max_elements):
    lineno = i + 1
    name = _block_name(_strip(lines[i]).split(), lineno, "bilocale")
    lat = None
    part_labels = {1: None, 2: None}
    i += 1
    while i < len(lines):
        raw = _strip(lines[i])
        if not raw:
            i += 1
            continue
        parts = raw.split()
        if parts[0] == "lattice":
            _, lat, i = _parse_lattice(lines, i, max_elements)
            continue
        i += 1
        if parts[0] == "end":
            if lat is None:
                raise ParseError(i, f"bilocale {name}: no lattice given")
            masks = []
            for idx in (1, 2):
                if part_labels[idx] is None:
                    raise ParseError(i, f"bilocale {name}: part{idx} missing")
                m = 0
                for lab in part_labels[idx]:
                    try:
                        m |= 1 << lat.index(lab)
                    except ValueError as exc:
                        raise ParseError(i, str(exc)) from None
                masks.append(m)
            return name, validate_bilocale(lat, masks[0], masks[1], name=name), i
        if parts[0] == "use":
            if len(parts) != 2 or parts[1] not in doc.items:
                raise ParseError(i, f"bilocale {name}: unknown lattice "
                                 f"{parts[1] if len(parts) > 1 else '?'!r}")
            ref = doc[parts[1]]
            if not isinstance(ref, FiniteLattice):
                raise ParseError(i, f"bilocale {name}: {parts[1]!r} is not a lattice")
            lat = ref
        elif parts[0] in ("part1", "part2"):
            part_labels[int(parts[0][-1])] = parts[1:]
        else:
            raise ParseError(i, f"unexpected line in bilocale block: {raw!r}")
    raise ParseError(i, f"bilocale {name}: missing 'end'")


_SET = re.compile(r"^\{([^{}]*)\}$")


def _parse_point_set(tok, lineno):
    m = _SET.match(tok)
    if not m:
        raise ParseError(lineno, f"expected a {{p,...}} set, got {tok!r}")
    body = m.group(1).strip()
    return [] if not body else [p.strip() for p in body.split(",")]


def _parse_bispace(lines, i):
    lineno = i + 1
    name = _block_name(_strip(lines[i]).split(), lineno, "bispace")
    points = None
    opens = {1: [], 2: []}
    generate = True
    i += 1
    while i < len(lines):
        raw = _strip(lines[i])
        i += 1
        if not raw:
            continue
        parts = raw.split()
        if parts[0] == "end":
            if points is None:
                raise ParseError(i, f"bispace {name}: no points line")
            try:
                return name, build_bispace(points, opens[1], opens[2],
                                           generate=generate, name=name), i
            except ValueError as exc:
                raise ParseError(i, str(exc)) from None
        if parts[0] == "points":
            points = parts[1:]
        elif parts[0] in ("open1", "open2"):
            idx = int(parts[0][-1])
            for tok in parts[1:]:
                opens[idx].append(_parse_point_set(tok, i))
        elif parts[0] == "generate":
            if len(parts) != 2 or parts[1] not in ("on", "off"):
                raise ParseError(i, "generate takes 'on' or 'off'")
            generate = parts[1] == "on"
        else:
            raise ParseError(i, f"unexpected line in bispace block: {raw!r}")
    raise ParseError(i, f"bispace {name}: missing 'end'")


def _endpoint(doc, label, lineno):
    if label not in doc.items:
        raise ParseError(lineno, f"unknown map endpoint {label!r}")
    return doc[label]


def _parse_map(lines, i, doc):
    lineno = i + 1
    head = _strip(lines[i])
    m = re.match(r"^map\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$", head)
    if not m:
        raise ParseError(lineno, "expected 'map NAME : SOURCE -> TARGET'")
    name, src_name, tgt_name = m.groups()
    src = _endpoint(doc, src_name, lineno)
    tgt = _endpoint(doc, tgt_name, lineno)
    sends = {}
    i += 1
    while i < len(lines):
        raw = _strip(lines[i])
        i += 1
        if not raw:
            continue
        parts = raw.split()
        if parts[0] == "end":
            src_lat = src.total if isinstance(src, Bilocale) else src
            tgt_lat = tgt.total if isinstance(tgt, Bilocale) else tgt
            table = []
            for k in range(src_lat.n):
                lab = src_lat.names[k]
                if lab not in sends:
                    raise ParseError(i, f"map {name}: no send line for {lab!r}")
                try:
                    table.append(tgt_lat.index(sends[lab]))
                except ValueError as exc:
                    raise ParseError(i, str(exc)) from None
            if isinstance(src, Bilocale) and isinstance(tgt, Bilocale):
                return name, bilocalic_map(src, tgt, table, name=name), i
            return name, localic_map(src_lat, tgt_lat, table, name=name), i
        m2 = re.match(r"^send\s+(\S+)\s*->\s*(\S+)$", raw)
        if not m2:
            raise ParseError(i, f"unexpected line in map block: {raw!r}")
        sends[m2.group(1)] = m2.group(2)
    raise ParseError(i, f"map {name}: missing 'end'")


# -- serializers -----------------------------------------------------------


def _cover_pairs(lat):
    out = []
    for a in range(lat.n):
        above = lat.up[a] & ~(1 << a)
        for b in kernel.bit_indices(above):
            if lat.up[a] & lat.down[b] & ~(1 << a) & ~(1 << b) == 0:
                out.append((lat.names[a], lat.names[b]))
    return out


def lattice_to_text(lat, name=None):
    lines = [f"lattice {name or lat.name}",
             "elements " + " ".join(lat.names)]
    for lo, hi in _cover_pairs(lat):
        lines.append(f"order {lo}<={hi}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def bilocale_to_text(b, name=None):
    name = name or b.name
    lines = [f"bilocale {name}"]
    lines.extend(lattice_to_text(b.total).rstrip("\n").splitlines())
    lines.append("part1 " + " ".join(b.part(1).labels))
    lines.append("part2 " + " ".join(b.part(2).labels))
    lines.append("end")
    return "\n".join(lines) + "\n"


def bispace_to_text(space, name=None):
    lines = [f"bispace {name or space.name}",
             "points " + " ".join(space.points)]
    for idx, fam in ((1, space.tau1), (2, space.tau2)):
        for mask in fam:
            lines.append(f"open{idx} " + space.set_label(mask))
    lines.append("generate off")
    lines.append("end")
    return "\n".join(lines) + "\n"


def map_to_text(f, source_name, target_name, name=None):
    base = f.base if isinstance(f, BilocalicMap) else f
    lines = [f"map {name or base.name} : {source_name} -> {target_name}"]
    for a in range(base.source.n):
        lines.append(f"send {base.source.names[a]} -> "
                     f"{base.target.names[base.table[a]]}")
    lines.append("end")
    return "\n".join(lines) + "\n"
