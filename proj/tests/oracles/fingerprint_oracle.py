#!/usr/bin/env python3
# evmclone: bytecode-level clone detection for Ethereum contracts
# Copyright 2026 The evmclone Authors.
# SPDX-License-Identifier: Apache-2.0
"""Independent reference for the frozen values in tests/unit/fingerprint_test.cpp.

Shares no code with the C++ implementation: its own linear-sweep decoder,
FNV-1a, alphabet, piece cutter and full-matrix Levenshtein. Run it and paste
the printed literals into the test when the fixtures change.
"""

ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/"
TRIGGERS = {0x56, 0x57, 0xFD, 0x00, 0xF3}

OPS = {
    "STOP": 0x00, "ADD": 0x01, "LT": 0x10, "EQ": 0x14, "ISZERO": 0x15, "AND": 0x16,
    "DIV": 0x04, "CALLVALUE": 0x34, "CALLDATALOAD": 0x35, "CALLDATASIZE": 0x36,
    "POP": 0x50, "MLOAD": 0x51, "MSTORE": 0x52, "SLOAD": 0x54, "SSTORE": 0x55,
    "JUMP": 0x56, "JUMPI": 0x57, "JUMPDEST": 0x5B, "RETURN": 0xF3, "REVERT": 0xFD,
    "CALLER": 0x33, "SUB": 0x03,
}
for n in range(1, 17):
    OPS[f"DUP{n}"] = 0x7F + n
    OPS[f"SWAP{n}"] = 0x8F + n


def asm(text):
    """'PUSH1:80 PUSH1:40 MSTORE' -> bytes."""
    out = bytearray()
    for tok in text.split():
        if tok.startswith("PUSH"):
            name, _, imm = tok.partition(":")
            n = int(name[4:])
            out.append(0x5F + n)
            out += int(imm, 16).to_bytes(n, "big")
        else:
            out.append(OPS[tok])
    return bytes(out)


def tokenize(code):
    out = bytearray()
    i = 0
    while i < len(code):
        op = code[i]
        out.append(op)
        i += 1 + (op - 0x5F if 0x60 <= op <= 0x7F else 0)
    return bytes(out)


def pieces(tokens):
    res, cur = [], bytearray()
    for b in tokens:
        cur.append(b)
        if b in TRIGGERS:
            res.append(bytes(cur))
            cur = bytearray()
    if cur:
        res.append(bytes(cur))
    return res


def fnv1a32(data):
    h = 0x811C9DC5
    for b in data:
        h ^= b
        h = (h * 0x01000193) & 0xFFFFFFFF
    return h


def fingerprint(code):
    return "".join(ALPHABET[fnv1a32(p) % 64] for p in pieces(tokenize(code)))


def levenshtein(a, b):
    d = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(len(a) + 1):
        d[i][0] = i
    for j in range(len(b) + 1):
        d[0][j] = j
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            d[i][j] = min(d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] != b[j - 1]))
    return d[len(a)][len(b)]


# HelloWorld-style runtime: dispatcher, three functions, SafeMath.add with a
# require. The variant drops the require, as in a hand-edited clone.
PROLOGUE = [
    "PUSH1:80 PUSH1:40 MSTORE PUSH1:04 CALLDATASIZE LT PUSH2:0041 JUMPI",
    "PUSH1:00 CALLDATALOAD PUSH29:0100000000000000000000000000000000000000000000000000000000"
    " SWAP1 DIV PUSH4:ffffffff AND DUP1 PUSH4:3ccfd60b EQ PUSH2:0046 JUMPI",
    "DUP1 PUSH4:6d4ce63c EQ PUSH2:005d JUMPI",
    "DUP1 PUSH4:771602f7 EQ PUSH2:0088 JUMPI",
    "JUMPDEST PUSH1:00 DUP1 REVERT",
]


def function(body_slot):
    return [
        "JUMPDEST CALLVALUE DUP1 ISZERO PUSH2:0052 JUMPI",
        "PUSH1:00 DUP1 REVERT",
        f"JUMPDEST POP PUSH2:005b PUSH2:{body_slot:04x} JUMP",
        "JUMPDEST PUSH1:40 MLOAD DUP1 DUP3 DUP2 MSTORE PUSH1:20 ADD SWAP2 POP POP PUSH1:40 MLOAD"
        " DUP1 SWAP2 SUB SWAP1 RETURN",
    ]


SAFE_ADD_CHECKED = [
    "JUMPDEST PUSH1:00 DUP3 DUP5 ADD SWAP1 POP DUP4 DUP2 LT ISZERO ISZERO ISZERO PUSH2:00c7 JUMPI",
    "PUSH1:00 DUP1 REVERT",
    "JUMPDEST DUP1 SWAP2 POP POP SWAP3 SWAP2 POP POP JUMP",
]
SAFE_ADD_UNCHECKED = [
    "JUMPDEST PUSH1:00 DUP3 DUP5 ADD SWAP1 POP DUP1 SWAP2 POP POP SWAP3 SWAP2 POP POP JUMP",
]
EPILOGUE = [
    "JUMPDEST CALLER PUSH1:00 SSTORE JUMP",
    "JUMPDEST PUSH1:00 SLOAD SWAP1 JUMP",
    "JUMPDEST PUSH1:01 PUSH1:00 SLOAD ADD PUSH1:00 SSTORE STOP",
    "JUMPDEST PUSH1:00 DUP1 SLOAD CALLER EQ ISZERO PUSH2:00f0 JUMPI",
    "JUMPDEST PUSH1:01 SLOAD SWAP2 POP POP JUMP",
]


def hello(checked):
    parts = PROLOGUE + function(0x90) + function(0xa0) + function(0xb0)
    parts += SAFE_ADD_CHECKED if checked else SAFE_ADD_UNCHECKED
    parts += EPILOGUE
    return asm(" ".join(parts))


if __name__ == "__main__":
    print("piece [0x00] char:", ALPHABET[fnv1a32(b"\x00") % 64], hex(fnv1a32(b"\x00")))
    print("piece [0x60 0x56] char:", ALPHABET[fnv1a32(b"\x60\x56") % 64])
    a, b = hello(True), hello(False)
    fa, fb = fingerprint(a), fingerprint(b)
    d = levenshtein(fa, fb)
    print("original hex:", a.hex())
    print("variant hex: ", b.hex())
    print("original fp:", fa, len(fa))
    print("variant fp: ", fb, len(fb))
    print("distance:", d, "score:", (1 - d / max(len(fa), len(fb))) * 100)
    print("kitten/sitting:", levenshtein("kitten", "sitting"))
