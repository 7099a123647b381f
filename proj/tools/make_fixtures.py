#!/usr/bin/env python3
"""Regenerate the bundled reference data under fixtures/.

Every file is a JSON object with a "checksum" entry holding the FNV-1a 64-bit
hash of the compact, key-sorted dump of the remaining fields. conekit refuses
to load a file whose checksum does not match.
"""

import argparse
import json
import pathlib

VERSION = 1
FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3


def fnv1a64(data: bytes) -> int:
    h = FNV_OFFSET
    for b in data:
        h ^= b
        h = (h * FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def canonical(obj) -> bytes:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True, ensure_ascii=False).encode("utf-8")


def seal(doc: dict) -> dict:
    body = {k: v for k, v in doc.items() if k != "checksum"}
    body["checksum"] = "fnv1a64:%016x" % fnv1a64(canonical(body))
    return body


def vec(*xs):
    return [str(x) for x in xs]


def space(family, n, m=None, stage=0):
    if m is None:
        m = n
    name = ("Q(%d)" if family == "qn" else "X(%d)") % n
    if family == "xnm":
        name = "X(%d,%d)" % (n, m)
    if stage:
        name += "_%d" % stage
    return {"family": family, "n": n, "m": m, "stage": stage, "name": name}


# Divisor classes in the basis (H, E_1, E_2).
D1, D2, D3 = vec(1, 0, 0), vec(2, -1, 0), vec(3, -2, -1)
E1, E2 = vec(0, 1, 0), vec(0, 0, 1)
E3 = vec(4, -3, -2)
DM = vec(6, -3, -2)


def rank3_square(family):
    return {
        "space": space(family, 3),
        "any_m": False,
        "gkz_equals_mcd": True,
        "chamber_count": 9,
        "sbl_chamber_count": 8,
        "remove_walls": [[D2, E2]],
        "labels": [
            {"rays": [D1, D2, D3], "label": "∅"},
            {"rays": [D1, D3, DM], "label": "non-divisorial"},
            {"rays": [D3, E3, DM], "label": "E_3"},
            {"rays": [DM, E1, E3], "label": "E_1∪E_3"},
            {"rays": [D1, E1, DM], "label": "E_1"},
            {"rays": [D3, E2, E3], "label": "E_2∪E_3"},
            {"rays": [D1, E1, E2], "label": "E_1∪E_2"},
            {"rays": [D1, D2, D3, E2], "label": "E_2"},
        ],
    }


def x2m():
    return {
        "space": space("xnm", 2, 3),
        "any_m": True,
        "gkz_equals_mcd": True,
        "chamber_count": 5,
        "sbl_chamber_count": 4,
        "remove_walls": [[D2, E2]],
        "labels": [
            {"rays": [D1, D2, D3], "label": "∅"},
            {"rays": [D1, D2, D3, E2], "label": "E_2"},
            {"rays": [E1, D1, E2], "label": "E_1∪E_2"},
            {"rays": [E1, D1, D3], "label": "E_1"},
        ],
    }


def rank2_square(family):
    e1, d1, d2, e2 = vec(0, 1), vec(1, 0), vec(2, -1), vec(3, -2)
    return {
        "space": space(family, 2),
        "any_m": False,
        "gkz_equals_mcd": True,
        "chamber_count": 3,
        "sbl_chamber_count": 3,
        "remove_walls": [],
        "labels": [
            {"rays": [e1, d1], "label": "E_1"},
            {"rays": [d1, d2], "label": "∅"},
            {"rays": [d2, e2], "label": "E_2"},
        ],
    }


def x1m():
    e1, d1, d2 = vec(0, 1), vec(1, 0), vec(2, -1)
    return {
        "space": space("xnm", 1, 2),
        "any_m": True,
        "gkz_equals_mcd": True,
        "chamber_count": 2,
        "sbl_chamber_count": 2,
        "remove_walls": [],
        "labels": [
            {"rays": [e1, d1], "label": "E_1"},
            {"rays": [d1, d2], "label": "∅"},
        ],
    }


def first_stage(family, n):
    d = [vec(k, -(k - 1)) for k in range(1, n + 2)]
    labels = [{"rays": [vec(0, 1), d[0]], "label": "E_1"}, {"rays": [d[0], d[1]], "label": "∅"}]
    for h in range(2, n + 1):
        labels.append({"rays": [d[h - 1], d[h]], "label": "sec_%d" % h})
    return {
        "space": space(family, n, n + 1 if family == "xnm" else n, 1),
        "any_m": family == "xnm",
        "gkz_equals_mcd": True,
        "chamber_count": n + 1,
        "sbl_chamber_count": n + 1,
        "remove_walls": [],
        "labels": labels,
    }


def sbl_document():
    records = [rank3_square("xn"), rank3_square("qn"), x2m(), rank2_square("xn"), rank2_square("qn"), x1m()]
    for family in ("xnm", "xn", "qn"):
        for n in range(2, 9):
            records.append(first_stage(family, n))
    return {"version": VERSION, "kind": "sbl_decompositions", "records": records}


def counts_document():
    fans = []
    for family, n, m, stage, gkz, sbl in [
        ("xn", 3, 3, 0, 9, 8),
        ("qn", 3, 3, 0, 9, 8),
        ("xnm", 2, 3, 0, 5, 4),
        ("xnm", 2, 4, 0, 5, 4),
        ("xnm", 2, 5, 0, 5, 4),
        ("xn", 2, 2, 0, 3, 3),
        ("qn", 2, 2, 0, 3, 3),
        ("xnm", 1, 2, 0, 2, 2),
        ("xnm", 1, 3, 0, 2, 2),
        ("xnm", 1, 4, 0, 2, 2),
    ]:
        fans.append({"space": space(family, n, m, stage), "gkz": gkz, "sbl": sbl})
    for n in range(2, 7):
        for family, m in (("xnm", n + 1), ("xn", n), ("qn", n)):
            fans.append({"space": space(family, n, m, 1), "gkz": n + 1, "sbl": n + 1})

    movable = []
    for n in range(2, 11):
        movable.append({"space": space("xn", n), "rays": 2 ** (n - 1)})
        movable.append({"space": space("qn", n), "rays": 2 ** (n - 1)})
    for n in range(1, 9):
        for m in (n + 1, n + 2):
            movable.append({"space": space("xnm", n, m), "rays": 2 ** (n - 1) + 1})

    bench = [
        {"space": space("qn", 10), "rays": 512, "reference_seconds": "2.527"},
        {"space": space("qn", 13), "rays": 4096, "reference_seconds": "447.010"},
        {"space": space("qn", 14), "rays": 8192, "reference_seconds": "3207.981"},
        {"space": space("xn", 3), "rays": 4, "reference_seconds": "0.045"},
    ]
    return {"version": VERSION, "kind": "expected_counts", "fans": fans, "movable": movable, "bench": bench}


def report(sp, cone, basis, rays):
    rays = sorted(rays, key=lambda r: [int(x) for x in r])
    return {"space": sp, "cone": cone, "basis": basis, "rays": rays, "ray_count": len(rays)}


def golden_document():
    h3 = ["H", "E_1", "E_2"]
    h4 = ["H", "E_1", "E_2", "E_3"]
    c3 = ["l", "e_1", "e_2"]
    c2 = ["l", "e_1"]
    mov4 = [
        (4, -3, -2, -1), (3, -2, -1, 0), (12, -8, -6, -3), (1, 0, 0, 0),
        (2, -1, 0, 0), (8, -4, -3, -2), (16, -11, -6, -4), (9, -4, -3, 0),
    ]
    cones = [
        report(space("xn", 3), "mov", h3, [D1, D2, D3, DM]),
        report(space("xn", 4), "mov", h4, [vec(*r) for r in mov4]),
        report(space("xn", 2), "mov", ["H", "E_1"], [vec(1, 0), vec(2, -1)]),
        report(space("xn", 3), "nef", h3, [D1, D2, D3]),
        report(space("qn", 3), "nef", h3, [D1, D2, D3]),
        report(space("xnm", 2, 3), "nef", h3, [D1, D2, D3]),
        report(space("qn", 2), "nef", ["H", "E_1"], [vec(1, 0), vec(2, -1)]),
        report(space("xn", 3), "eff", h3, [E1, E2, E3]),
        report(space("xnm", 2, 3), "eff", h3, [E1, E2, D3]),
        report(space("xn", 3, 3, 1), "eff", ["H", "E_1"], [vec(0, 1), vec(4, -3)]),
        report(space("xn", 3), "mori", c3, [vec(1, -2, 1), vec(0, 1, -2), vec(0, 0, 1)]),
        report(space("xnm", 2, 3), "mori", c3, [vec(1, -2, 1), vec(0, 1, -2), vec(0, 0, 1)]),
        report(space("xn", 2), "mori", c2, [vec(0, 1), vec(1, -2)]),
        report(space("xn", 3), "movcurves", c3, [vec(1, 0, 0), vec(3, -4, 0), vec(1, 0, -2)]),
        report(space("qn", 3), "movcurves", c3, [vec(1, 0, 0), vec(3, -4, 0), vec(1, 0, -2)]),
        report(space("xn", 2), "movcurves", c2, [vec(1, 0), vec(2, -3)]),
    ]
    anticanonical = [
        {"space": space("xn", 3), "class": vec(16, -8, -3)},
        {"space": space("xn", 3, 3, 1), "class": vec(16, -8)},
        {"space": space("qn", 2), "class": vec(6, -2)},
    ]
    return {"version": VERSION, "kind": "golden_cones", "cones": cones, "anticanonical": anticanonical}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "fixtures"))
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, doc in [
        ("sbl_decompositions.json", sbl_document()),
        ("expected_counts.json", counts_document()),
        ("golden_cones.json", golden_document()),
    ]:
        text = json.dumps(seal(doc), indent=1, sort_keys=True, ensure_ascii=False) + "\n"
        (out / name).write_text(text, encoding="utf-8")
        print("wrote", out / name)


if __name__ == "__main__":
    main()
