#!/usr/bin/env python3
# Copyright 2026 The IDIA Toolkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the checked-in test fixtures.

conformance/: a tiny token-mode embedding table, 100 wire requests and the
golden responses. Golden answers come from a float64 cosine argmax over the
float32 values with the lowest index winning ties.

captions/: a 50-identity roster, a caption dump and the answer key. Each
case below carries its label by hand; nothing here calls a matcher.
"""

import json
import pathlib
import unicodedata

import numpy as np

HERE = pathlib.Path(__file__).resolve().parent


def fmt_float(x):
    return repr(float(np.float32(x)))


def write_csv(path, ids, matrix):
    with open(path, "w", encoding="utf-8") as f:
        for row_id, row in zip(ids, matrix):
            f.write(",".join([row_id] + [fmt_float(v) for v in row]) + "\n")


def dump(obj):
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def make_conformance():
    rng = np.random.default_rng(20260101)
    out = HERE / "conformance"
    out.mkdir(exist_ok=True)
    dim = 8
    names = ["Ada Lovelace", "Alan Turing", "Grace Hopper", "José Álvarez",
             "Zoë Kravitz", "Katherine Johnson", "Claude Shannon",
             "Edsger Dijkstra", "Barbara Liskov", "Donald Knuth",
             "Frances Allen", "John McCarthy"]
    texts = rng.standard_normal((len(names), dim)).astype(np.float32)
    # Two names share one embedding so that every query offering both is an
    # exact tie.
    texts[8] = texts[3]
    images = []
    image_ids = []
    for i in range(30):
        anchor = texts[i % len(names)].astype(np.float64)
        noise = rng.standard_normal(dim) * 0.6
        images.append((anchor + noise).astype(np.float32))
        image_ids.append(f"tok-{i:02d}")
    images = np.array(images)
    write_csv(out / "images.csv", image_ids, images)
    write_csv(out / "texts.csv", names, texts)

    t64 = texts.astype(np.float64)
    i64 = images.astype(np.float64)
    requests = []
    golden = []
    while len(requests) < 100:
        img = int(rng.integers(len(image_ids)))
        size = int(rng.integers(2, len(names) + 1))
        order = [int(x) for x in rng.permutation(len(names))[:size]]
        if len(requests) % 10 == 0 and 3 not in order:
            order[-1] = 3
        if len(requests) % 10 == 0 and 8 not in order:
            order[0] = 8
        order = list(dict.fromkeys(order))
        v = i64[img]
        cos = [float(v @ t64[j] / (np.linalg.norm(v) * np.linalg.norm(t64[j])))
               for j in order]
        best = max(cos)
        winners = [p for p, c in enumerate(cos) if c == best]
        runner = sorted(set(cos))[-2] if len(set(cos)) > 1 else None
        # Keep genuine ties (identical vectors) but reject near ties that a
        # different summation order could flip.
        if runner is not None and best - runner < 1e-6:
            continue
        requests.append({"image": image_ids[img], "image_kind": "token",
                         "prompts": [names[j] for j in order]})
        golden.append({"prompt_index": winners[0]})
    with open(out / "queries.jsonl", "w", encoding="utf-8") as f:
        for r in requests:
            f.write(dump(r) + "\n")
    with open(out / "golden.jsonl", "w", encoding="utf-8") as f:
        for g in golden:
            f.write(dump(g) + "\n")


def nfd(s):
    return unicodedata.normalize("NFD", s)


# (name as stored in the roster, captions, label). None for captions means
# the identity is absent from the dump.
CASES = [
    ("Ada Lovelace", ["A portrait of Ada Lovelace, 1840."], "member"),
    ("Alan Turing", ["alan turing at bletchley park"], "member"),
    ("Grace Hopper", ["GRACE HOPPER ON STAGE"], "member"),
    ("Claude Shannon", ["Claude   Shannon juggling"], "member"),
    ("Edsger Dijkstra", ["Edsger\tDijkstra lecturing"], "member"),
    ("Barbara Liskov", ["Barbara Liskov receives award"], "member"),
    ("Donald Knuth", ["Donald　Knuth signing books"], "member"),
    ("José Álvarez", [nfd("José Álvarez scores a goal")], "member"),
    (nfd("Zoë Kravitz"), ["Zoë Kravitz at the premiere"], "member"),
    ("René Magritte", ["painting by rené magritte"], "member"),
    ("Johann Strauß", ["JOHANN STRAUSS waltz concert"], "member"),
    ("Frances Allen", ["Frances Allen's compiler work"], "member"),
    ("John McCarthy", ["(John McCarthy)"], "member"),
    ("Jean-Luc Picard", ["captain jean-luc picard on the bridge"], "member"),
    ("Marie Curie", ["a lab", "another lab", "Marie Curie in her lab"],
     "member"),
    ("Niels Bohr", ["Niels Bohr"], "member"),
    ("Lise Meitner", ["Physicist: Lise Meitner."], "member"),
    ("Emmy Noether", ["\"Emmy Noether\" lecture series"], "member"),
    ("  Max   Planck ", ["Max Planck institute"], "member"),
    ("Paul Dirac", ["Paul Dirac, Paul Dirac, Paul Dirac"], "member"),
    ("Ida Noddack", ["ida noddack\n(chemist)"], "member"),
    ("Ørsted Hans", ["ørsted hans experiment"], "member"),
    ("Chien-Shiung Wu", ["Chien-Shiung Wu at Columbia"], "member"),
    ("Ann Lee", ["Annie Lee at the beach"], "non-member"),
    ("Tom Ford", ["Tom Fordham University campus"], "non-member"),
    ("Eve Arden", ["Steve Arden in a car"], "non-member"),
    ("Al Gore", ["Algore rhythm"], "non-member"),
    ("Rosalind Franklin", ["Rosalind at the park", "Franklin stove"],
     "non-member"),
    ("Carl Sagan", ["Carl", "Sagan"], "non-member"),
    ("Zoe Saldana", ["Zoë Saldana walks the carpet"], "non-member"),
    ("Amy Adams", ["Amy Adamson smiles"], "non-member"),
    ("Ben Stiller", ["Benjamin Stiller"], "non-member"),
    ("Ian Holm", ["Brian Holm wins the stage"], "non-member"),
    ("Mia Farrow", ["mia-farrowing season"], "non-member"),
    ("Sam Neill", ["Samuel Neill"], "non-member"),
    ("Kim Basinger", ["KimBasinger fan page"], "non-member"),
    ("Lea Thompson", ["Léa Thompson in Paris"], "non-member"),
    ("Joan Allen", ["Joanne Allen and friends"], "non-member"),
    ("Uma Thurman", ["a temple in the mountains"], "non-member"),
    ("Ray Liotta", ["X-ray Liotta"], "member"),
    ("Tim Roth", ["Tim Rothko exhibit"], "non-member"),
    ("Eva Green", ["Evangeline Green house"], "non-member"),
    ("Dev Patel", ["devpatel official"], "non-member"),
    ("Jet Li", ["a jet lifts off"], "non-member"),
    ("Gal Gadot", ["Gal  Gadotte premiere"], "non-member"),
    ("Kurt Russell", None, "unknown"),
    ("Goldie Hawn", None, "unknown"),
    ("Meryl Streep", None, "unknown"),
    ("Tilda Swinton", None, "unknown"),
    ("Idris Elba", None, "unknown"),
]


def make_captions():
    assert len(CASES) == 50, len(CASES)
    out = HERE / "captions"
    out.mkdir(exist_ok=True)
    with open(out / "roster.jsonl", "w", encoding="utf-8") as roster, \
         open(out / "captions.jsonl", "w", encoding="utf-8") as captions, \
         open(out / "answer_key.csv", "w", encoding="utf-8") as key:
        key.write("id,label\n")
        for i, (name, caps, label) in enumerate(CASES):
            ident = f"p{i:02d}"
            roster.write(dump({
                "id": ident, "name": name, "label": "unknown",
                "images": [{"kind": "opaque-token",
                            "value": f"{ident}-img{j}"} for j in range(3)],
            }) + "\n")
            for c in caps or []:
                captions.write(dump({"id": ident, "caption": c}) + "\n")
            key.write(f"{ident},{label}\n")


if __name__ == "__main__":
    make_conformance()
    make_captions()
