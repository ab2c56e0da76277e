#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Regenerate the gadget template JSON files under crates/core/gadgets/v1.

Each gadget is written as a list of (name, op, args, registered) steps over
wire names; the script numbers the nodes and writes the netlist form.
"""
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "crates/core/gadgets/v1"

GADGETS = {
    "dom": {
        "note": "Domain-oriented masking AND. Cross-domain products are remasked with r and registered.",
        "randoms": ["r"],
        "steps": [
            ("p01", "AND", ["a0", "b1"], False),
            ("i01", "XOR", ["p01", "r"], True),
            ("p10", "AND", ["a1", "b0"], False),
            ("i10", "XOR", ["p10", "r"], True),
            ("p00", "AND", ["a0", "b0"], False),
            ("p11", "AND", ["a1", "b1"], False),
            ("c0", "XOR", ["i01", "p00"], False),
            ("c1", "XOR", ["i10", "p11"], False),
        ],
    },
    "hpc1": {
        "note": "DOM AND whose b input is refreshed with r0 and registered first.",
        "randoms": ["r0", "r"],
        "steps": [
            ("bb0", "XOR", ["b0", "r0"], True),
            ("bb1", "XOR", ["b1", "r0"], True),
            ("p01", "AND", ["a0", "bb1"], False),
            ("i01", "XOR", ["p01", "r"], True),
            ("p10", "AND", ["a1", "bb0"], False),
            ("i10", "XOR", ["p10", "r"], True),
            ("p00", "AND", ["a0", "bb0"], False),
            ("p11", "AND", ["a1", "bb1"], False),
            ("c0", "XOR", ["i01", "p00"], False),
            ("c1", "XOR", ["i10", "p11"], False),
        ],
    },
    "hpc2": {
        "note": "HPC2 AND: c_i = a_i b_i ^ (~a_i & r) ^ (a_i & (b_j ^ r)), registers on the six cross-domain terms.",
        "randoms": ["r"],
        "steps": [
            ("u0", "XOR", ["b1", "r"], True),
            ("u1", "XOR", ["b0", "r"], True),
            ("na0", "NOT", ["a0"], False),
            ("v0", "AND", ["na0", "r"], True),
            ("na1", "NOT", ["a1"], False),
            ("v1", "AND", ["na1", "r"], True),
            ("t0", "AND", ["a0", "u0"], True),
            ("t1", "AND", ["a1", "u1"], True),
            ("p00", "AND", ["a0", "b0"], False),
            ("p11", "AND", ["a1", "b1"], False),
            ("s0", "XOR", ["v0", "t0"], False),
            ("s1", "XOR", ["v1", "t1"], False),
            ("c0", "XOR", ["p00", "s0"], False),
            ("c1", "XOR", ["p11", "s1"], False),
        ],
    },
    "comar": {
        "note": "Six-mask AND. Inputs are remasked (a with r, b with rp), the four cross products "
                "are remasked with r2..r5; c1 collects r2..r5 through one registered XOR. "
                "Registers: a0^r, a1^r, the four remasked products and the root of c1.",
        "randoms": ["r", "rp", "r2", "r3", "r4", "r5"],
        "steps": [
            ("ma0", "XOR", ["a0", "r"], True),
            ("ma1", "XOR", ["a1", "r"], True),
            ("mb0", "XOR", ["b0", "rp"], False),
            ("mb1", "XOR", ["b1", "rp"], False),
            ("q00", "AND", ["ma0", "mb0"], False),
            ("q01", "AND", ["ma0", "mb1"], False),
            ("q10", "AND", ["ma1", "mb0"], False),
            ("q11", "AND", ["ma1", "mb1"], False),
            ("k00", "XOR", ["q00", "r2"], True),
            ("k01", "XOR", ["q01", "r3"], True),
            ("k10", "XOR", ["q10", "r4"], True),
            ("k11", "XOR", ["q11", "r5"], True),
            ("x0", "XOR", ["k00", "k01"], False),
            ("x1", "XOR", ["x0", "k10"], False),
            ("c0", "XOR", ["x1", "k11"], False),
            ("e0", "XOR", ["r2", "r3"], False),
            ("e1", "XOR", ["e0", "r4"], False),
            ("c1", "XOR", ["e1", "r5"], True),
        ],
    },
}


def build(kind, spec):
    ids = {}
    nodes = []
    inputs = ["a0", "a1", "b0", "b1"] + spec["randoms"]
    for name in inputs:
        ids[name] = len(nodes)
        nodes.append({"id": len(nodes), "kind": "INPUT", "name": name})
    for name, op, args, reg in spec["steps"]:
        ids[name] = len(nodes)
        nodes.append({"id": len(nodes), "kind": op, "args": [ids[a] for a in args],
                      "reg": reg, "name": name})
    for out in ["c0", "c1"]:
        nodes.append({"id": len(nodes), "kind": "OUTPUT", "args": [ids[out]], "name": out})
    return {
        "format": "maskedhls-gadget/1",
        "gadget": kind,
        "note": spec["note"],
        "share_inputs": ["a0", "a1", "b0", "b1"],
        "randoms": spec["randoms"],
        "name": kind,
        "inputs": inputs,
        "outputs": ["c0", "c1"],
        "nodes": nodes,
    }


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for kind, spec in GADGETS.items():
        doc = build(kind, spec)
        text = json.dumps(doc, indent=1)
        (OUT / f"{kind}.json").write_text(text + "\n")


if __name__ == "__main__":
    main()
