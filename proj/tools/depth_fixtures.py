#!/usr/bin/env python3
# Copyright 2026 The QQC Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes tests/data/depth_fixtures.tsv.

Layers each circuit by hand-style ASAP bookkeeping: a gate lands one layer
after the latest gate on any of its qubits. Gate order follows the Pauli
feature map (Hadamards, then each word over its qubit subsets) and the
TwoLocal ansatz (rotation layers per gate kind, then entanglers on all pairs,
then a final rotation layer). Multi-qubit Pauli rotations count as one gate.
"""

import argparse
from itertools import combinations


def depth(gates, n):
    level = [0] * n
    for qubits in gates:
        layer = 1 + max(level[q] for q in qubits)
        for q in qubits:
            level[q] = layer
    return max(level)


def feature_map(n, reps, words):
    gates = []
    for _ in range(reps):
        gates += [(q,) for q in range(n)]
        for word in words:
            if len(word) == 1:
                gates += [(q,) for q in range(n)]
            else:
                gates += list(combinations(range(n), len(word)))
    return gates


def two_local(n, reps, rotations=2):
    gates = []
    for _ in range(reps):
        gates += [(q,) for _ in range(rotations) for q in range(n)]
        gates += list(combinations(range(n), 2))
    gates += [(q,) for _ in range(rotations) for q in range(n)]
    return gates


QSVM = [(2, 1), (2, 2), (4, 1), (4, 2), (5, 1), (7, 1), (7, 2), (11, 1), (11, 2), (11, 3)]
VQC = [(2, 1, 3), (4, 1, 4), (4, 2, 3), (5, 1, 1), (5, 2, 2), (5, 3, 3),
       (7, 1, 1), (7, 2, 2), (7, 2, 2), (11, 1, 1), (11, 2, 2)]
PAULI = ["X", "Y", "ZZ"]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="tests/data/depth_fixtures.tsv")
    args = parser.parse_args()
    rows = ["# classifier\texp\tfeatures\tfm_reps\tqc_reps\twords\tfm_depth\tqc_depth\ttotal_depth"]
    for i, (n, reps) in enumerate(QSVM, 1):
        d = depth(feature_map(n, reps, PAULI), n)
        rows.append(f"qsvm\t{i}\t{n}\t{reps}\t-\t{','.join(PAULI)}\t{d}\t-\t{d}")
    for i, (n, reps, qc) in enumerate(VQC, 1):
        words = ["ZZ", "XY", "ZZ"] if i == 9 else PAULI
        fm = feature_map(n, reps, words)
        d_fm = depth(fm, n)
        total = depth(fm + two_local(n, qc), n)
        rows.append(f"vqc\t{i}\t{n}\t{reps}\t{qc}\t{','.join(words)}\t{d_fm}\t{total - d_fm}\t{total}")
    rows.append(f"two_local\t0\t11\t-\t1\try,rz\t-\t{depth(two_local(11, 1), 11)}\t-")
    with open(args.out, "w") as f:
        f.write("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
