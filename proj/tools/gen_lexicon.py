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
"""Regenerates resources/lexicon.tsv.

One-off build step; the output is checked in so the C++ build never needs
Python. Requires `pip install wordfreq lemminflect`.

Output format: `word<TAB>TAG`, one tag per line. A word may appear on several
lines; the first line is its primary tag and later lines list alternatives
that the tagger's context rules may pick.
"""

import argparse

import lemminflect
import wordfreq

CLOSED_CLASS = """
a an the this that these those some any each every either neither no all both
half such what which who whom whose whatever whichever whoever how when where
why whether i me my mine myself we us our ours ourselves you your yours
yourself yourselves he him his himself she her hers herself it its itself
they them their theirs themselves one ones someone something somebody anyone
anything anybody everyone everything everybody nobody nothing none
of at by for with about against between into through during before after
above below to from up down in out on off over under again further then once
here there than as upon among amongst within without toward towards across
along around behind beside besides beyond despite except inside near onto
outside past per since throughout till until unto via versus vs
and but if or nor because while although though unless whereas so yet
not also too very just only even ever never
many much few several more most less least other another same own
zero two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty fifty
sixty seventy eighty ninety hundred thousand million billion trillion
first second third
""".split()

# Inflected forms of the primary auxiliaries and modals are always VERB.
AUX_VERBS = """
be am is are was were been being have has had having do does did doing done
can could will would shall should may might must
""".split()

ADJ_SUFFIXES = ("al", "ous", "ic", "ive", "ful", "less", "able", "ible",
                "ary", "ish", "ern", "ian", "ial", "ical", "ant", "ent")

# Domain words the frequency list misses; tags assigned by hand.
EXTRA = {
    "NOUN": """
    chlorine satellite earth faraday fyrd germans german emperor empress dynasty
    treaty armistice revolution revolutions rebellion siege sieges battle battles
    crusade crusades reformation renaissance colony colonies colonist colonists
    monarch monarchy parliament senate republic legion legions pharaoh pharaohs
    sultan sultans caliph caliphate shogun shogunate samurai viking vikings
    napoleon wellington caesar charlemagne genghis khan cleopatra lincoln
    churchill bismarck stalin hitler mussolini gandhi washington elizabeth
    victoria tudor tudors romans roman greeks persians ottomans mongols normans
    saxons anglo franks spartans athenians carthage carthaginians byzantium
    constantinople waterloo gettysburg normandy verdun somme stalingrad hastings
    troy rome athens sparta babylon egypt mesopotamia persia prussia britain
    england france germany russia spain italy china japan india america
    independence abolition suffrage armada blitzkrieg trench trenches
    atom atoms molecule molecules electron electrons proton protons neutron
    neutrons nucleus nuclei isotope isotopes photon photons quark quarks
    hydrogen oxygen nitrogen carbon helium sodium potassium calcium iron copper
    mercury uranium plutonium element elements compound compounds acid acids
    enzyme enzymes protein proteins cell cells gene genes chromosome chromosomes
    dna rna bacteria virus viruses photosynthesis mitochondria evolution species
    gravity velocity acceleration momentum friction magnetism electricity
    voltage current circuit circuits wavelength frequency spectrum telescope
    microscope planet planets galaxy galaxies nebula asteroid comet comets orbit
    orbits eclipse newton einstein darwin curie galileo kepler copernicus
    pasteur mendel bohr maxwell tesla edison hubble hawking physics chemistry
    biology astronomy geology thermodynamics relativity quantum entropy
    catalyst reaction reactions experiment experiments theory theories
    hypothesis hypotheses creation creations confirmation bias astrology
    telescopes vaccine vaccines antibiotic antibiotics penicillin radiation
    magnet magnets crystal crystals mineral minerals fossil fossils volcano
    volcanoes earthquake earthquakes tectonics dinosaur dinosaurs organism
    organisms ecosystem ecosystems metabolism hormone hormones neuron neurons
    """.split(),
    "ADJ": """
    natural electrochemical astrological napoleonic historical british western
    eastern northern southern medieval ancient roman greek persian ottoman
    mongol norman saxon byzantine victorian colonial imperial royal military
    naval nuclear atomic molecular chemical biological physical magnetic
    electric electrical solar lunar planetary stellar galactic thermal organic
    inorganic genetic cellular quantum scientific celestial volcanic tectonic
    """.split(),
    "VERB": """
    conclude concluded concluding conquer conquered invade invaded annex annexed
    abdicate abdicated crowned assassinate assassinated signed
    discover discovered invent invented orbited measured
    synthesize synthesized isolate isolated observe observed evolve evolved
    """.split(),
}


def primary_order(word, tags, lemmas):
    ordered = []

    def push(t):
        if t in tags and t not in ordered:
            ordered.append(t)

    is_inflected_verb = "VERB" in lemmas and word not in lemmas["VERB"]
    if word.endswith("ly"):
        push("ADV")
    if word.endswith(ADJ_SUFFIXES):
        push("ADJ")
    if is_inflected_verb and (word.endswith("ed") or word.endswith("ing")):
        push("VERB")
    if is_inflected_verb and not word.endswith("s") and "NOUN" in lemmas and word in lemmas["NOUN"]:
        # irregular past forms that double as nouns (rose, found, saw)
        push("VERB")
    for t in ("NOUN", "VERB", "ADJ", "ADV"):
        push(t)
    return ordered


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=5000)
    ap.add_argument("--out", default="resources/lexicon.tsv")
    args = ap.parse_args()

    closed = set(CLOSED_CLASS)
    aux = set(AUX_VERBS)
    entries = {}
    order = []

    def add(word, tags):
        if word not in entries:
            order.append(word)
            entries[word] = []
        for t in tags:
            if t not in entries[word]:
                entries[word].append(t)

    for w in sorted(closed):
        add(w, ["OTHER"])
    for w in sorted(aux):
        if w not in entries:
            add(w, ["VERB"])

    picked = 0
    for w in wordfreq.top_n_list("en", 20000):
        if picked >= args.size:
            break
        if not w.isalpha() or len(w) < 2 or w in entries:
            continue
        lemmas = lemminflect.getAllLemmas(w)
        tags = {k for k in lemmas if k in ("NOUN", "VERB", "ADJ", "ADV")}
        if not tags:
            continue
        add(w, primary_order(w, tags, lemmas))
        picked += 1

    for tag, words in EXTRA.items():
        for w in words:
            if w in entries:
                # hand tags override the generated primary
                if tag in entries[w]:
                    entries[w].remove(tag)
                entries[w].insert(0, tag)
            else:
                add(w, [tag])

    with open(args.out, "w") as f:
        for w in sorted(order):
            for t in entries[w]:
                f.write(f"{w}\t{t}\n")
    print(f"wrote {len(order)} words to {args.out}")


if __name__ == "__main__":
    main()
