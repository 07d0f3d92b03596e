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
"""Writes data/selqa_standin.jsonl.

A template-generated corpus with the same shape as the SelQA question/type
dump: ten domains, SelQA's unique per-domain question counts with its
test-split tags, one JSON object per line with "question", "type" and
"split". Questions are synthetic; they carry domain vocabulary so the
classifiers have something to learn, but accuracies measured on this file say
nothing about the real corpus.
"""

import argparse
import json
import random

# (unique questions, of which tagged test). The SelQA train and test columns
# overlap, so train + test exceeds the unique total; the stand-in keeps the
# unique totals and tags the remainder as train.
COUNTS = {
    "Art": (601, 135),
    "Country": (791, 178),
    "Food": (652, 147),
    "Historical Events": (730, 164),
    "Movies": (735, 164),
    "Music": (677, 155),
    "Science": (795, 179),
    "Sport": (741, 168),
    "Travel": (734, 165),
    "TV": (604, 135),
}

SEEDED = {
    "Historical Events": [
        "how many times was the who national fyrd called out between 1046 and 1065?",
        "when did the germans begin using chlorine gas on the western front?",
        "as a result of the napoleonic wars the british empire rose in power "
        "beginning the historical period known as what?",
    ],
    "Science": [
        "what is the natural satellite of earth?",
        "what two creations of confirmation bias are under study with respect "
        "to astrological belief?",
        "what had faraday concluded based on his electrochemical experiments?",
    ],
}

VOCAB = {
    "Historical Events": dict(
        subj=["the roman empire", "the ottoman army", "the british navy", "napoleon",
              "the french revolutionaries", "the vikings", "the mongol horde",
              "the spanish armada", "the allied forces", "the confederate army",
              "the byzantine emperor", "the crusaders", "the union army", "the tsar",
              "the treaty of versailles", "the hundred years war", "the normans",
              "the persian king", "the soviet union", "the prussian army",
              "the saxon nobles", "the english parliament", "the colonial rebels"],
        verb=["invade", "conquer", "sign", "defeat", "abolish", "annex", "declare",
              "besiege", "overthrow", "occupy", "surrender", "rebel against"],
        obj=["the city of constantinople", "the peace treaty", "the rebel colonies",
             "the northern provinces", "the royal palace", "the fortress",
             "the western front", "the capital", "the monarchy", "the island",
             "the border", "the southern kingdoms", "the harbour"],
        when=["in 1066", "during the war", "after the siege", "in the middle ages",
              "before the armistice", "in 1815", "during the reformation",
              "after the revolution", "in the seventeenth century", "in 1914"],
        noun=["battle", "treaty", "siege", "revolution", "dynasty", "armistice",
              "rebellion", "crusade", "empire", "war", "uprising", "coronation"],
    ),
    "Science": dict(
        subj=["the electron", "a proton", "the hydrogen atom", "photosynthesis",
              "the enzyme", "newton", "einstein", "the telescope", "a neutron star",
              "the catalyst", "the magnetic field", "the chemical reaction",
              "darwin", "the virus", "the cell membrane", "the planet mercury",
              "marie curie", "the isotope", "the laser", "the bacteria",
              "the nucleus", "galileo", "the molecule"],
        verb=["absorb", "emit", "measure", "orbit", "release", "produce",
              "accelerate", "convert", "bind", "split", "observe", "decay into"],
        obj=["light energy", "the oxygen molecules", "electric charge",
             "a magnetic field", "radiation", "the carbon atoms", "gamma rays",
             "the electrons", "heat", "the gravitational force", "protein chains",
             "the sun", "the spectrum"],
        when=["at room temperature", "in a vacuum", "under high pressure",
              "during the experiment", "in the laboratory", "in 1905",
              "at absolute zero", "during photosynthesis", "in the reactor",
              "in the upper atmosphere"],
        noun=["theory", "experiment", "equation", "element", "particle", "orbit",
              "hypothesis", "molecule", "wavelength", "compound", "gene", "law"],
    ),
}

GENERIC_TOPICS = {
    "Art": ["painting", "sculpture", "museum", "portrait", "gallery", "fresco",
            "canvas", "artist", "exhibition", "mural", "renaissance painter"],
    "Country": ["capital", "province", "border", "population", "government",
                "constitution", "river", "currency", "parliament", "region"],
    "Food": ["recipe", "dish", "sauce", "cheese", "bread", "spice", "dessert",
             "restaurant", "chef", "wine", "cuisine"],
    "Movies": ["film", "director", "actor", "sequel", "screenplay", "studio",
               "box office", "premiere", "trilogy", "character"],
    "Music": ["album", "band", "song", "singer", "concert", "guitarist",
              "symphony", "record label", "tour", "single"],
    "Sport": ["team", "league", "championship", "coach", "stadium", "player",
              "season", "tournament", "match", "goal"],
    "Travel": ["island", "resort", "airport", "hotel", "beach", "national park",
               "cruise", "mountain", "tourist", "city"],
    "TV": ["series", "episode", "season", "network", "host", "sitcom",
           "character", "show", "broadcast", "finale"],
}

ADJ = ["famous", "first", "largest", "oldest", "main", "original", "popular",
       "early", "modern", "major", "final", "national"]


def domain_question(rng, domain):
    v = VOCAB[domain]
    forms = [
        lambda: f"when did {rng.choice(v['subj'])} {rng.choice(v['verb'])} {rng.choice(v['obj'])}?",
        lambda: f"what did {rng.choice(v['subj'])} {rng.choice(v['verb'])} {rng.choice(v['when'])}?",
        lambda: f"who was the {rng.choice(ADJ)} {rng.choice(v['noun'])} associated with {rng.choice(v['subj'])}?",
        lambda: f"how many {rng.choice(v['noun'])}s were recorded {rng.choice(v['when'])}?",
        lambda: f"where did {rng.choice(v['subj'])} {rng.choice(v['verb'])} {rng.choice(v['obj'])} {rng.choice(v['when'])}?",
        lambda: f"which {rng.choice(v['noun'])} caused {rng.choice(v['subj'])} to {rng.choice(v['verb'])} {rng.choice(v['obj'])}?",
        lambda: f"why did {rng.choice(v['subj'])} {rng.choice(v['verb'])} {rng.choice(v['obj'])}?",
        lambda: f"what is the {rng.choice(ADJ)} {rng.choice(v['noun'])} of {rng.choice(v['subj'])}?",
        lambda: f"does {rng.choice(v['subj'])} {rng.choice(v['verb'])} {rng.choice(v['obj'])} {rng.choice(v['when'])}?",
        lambda: f"how did {rng.choice(v['subj'])} {rng.choice(v['verb'])} {rng.choice(v['obj'])} and who recorded the {rng.choice(v['noun'])}?",
    ]
    return rng.choice(forms)()


def generic_question(rng, domain):
    t = GENERIC_TOPICS[domain]
    a, b = rng.choice(t), rng.choice(t)
    forms = [
        f"what is the name of the {rng.choice(ADJ)} {a}?",
        f"who created the {a} known for its {b}?",
        f"when was the {rng.choice(ADJ)} {a} first introduced?",
        f"where is the {a} located?",
        f"how many {a}s are part of the {b}?",
        f"which {a} is the most {rng.choice(['famous', 'popular', 'expensive', 'visited'])}?",
        f"what {b} is the {a} associated with?",
        f"why is the {rng.choice(ADJ)} {a} linked to the {b}?",
        f"how did the {a} change the {rng.choice(ADJ)} {b}?",
    ]
    return rng.choice(forms)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=2016)
    ap.add_argument("--out", default="data/selqa_standin.jsonl")
    args = ap.parse_args()
    rng = random.Random(args.seed)

    lines = []
    for domain, (total, n_test) in COUNTS.items():
        n_train = total - n_test
        seen = set()
        questions = list(SEEDED.get(domain, []))
        seen.update(questions)
        guard = 0
        while len(questions) < total:
            guard += 1
            if guard > 200000:
                raise SystemExit(f"cannot generate {total} unique questions for {domain}")
            if domain in VOCAB:
                q = domain_question(rng, domain)
            else:
                q = generic_question(rng, domain)
            if q in seen:
                continue
            seen.add(q)
            questions.append(q)
        rng.shuffle(questions)
        for i, q in enumerate(questions):
            split = "train" if i < n_train else "test"
            lines.append({"question": q, "type": domain, "split": split})

    with open(args.out, "w") as f:
        for rec in lines:
            f.write(json.dumps(rec) + "\n")
    print(f"wrote {len(lines)} records to {args.out}")


if __name__ == "__main__":
    main()
