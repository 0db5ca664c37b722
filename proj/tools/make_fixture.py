#!/usr/bin/env python3
"""Generate the synthetic fixture corpus under data/fixture/.

The output is deterministic (fixed seed). Institution and journal names are
invented; none of the numbers describe real institutions.

Two cells are constructed on purpose so tests can rely on them:
  * U01 dominates every indicator in "Engineering (all)" (code 80000): all of
    its engineering papers sit in top-quartile engineering journals and carry
    the highest citation counts.
  * U12 has exactly 5 papers in "Artificial Intelligence" (41702), 3 of them
    in journals that are top-quartile for that subject.
"""

import csv
import math
import os
import random
import sys

SEED = 20131231
N_PUBLICATIONS = 500
YEARS = range(2008, 2014)

# (root code, root name, [(l2 code, l2 name, [(l3 code, l3 name), ...]), ...])
TAXONOMY = [
    (10000, "Agricultural and Biological Sciences (all)", [
        (11100, "Agricultural and Biological Sciences (others)", [
            (11101, "Agricultural and Biological Sciences (all)"),
            (11102, "Agronomy and Crop Science"),
            (11103, "Animal Science and Zoology")]),
        (11200, "Plant and Soil Science", [
            (11201, "Plant Science"),
            (11202, "Soil Science")])]),
    (20000, "Biochemistry, Genetics and Molecular Biology (all)", [
        (21300, "Biochemistry and Genetics", [
            (21301, "Biochemistry"),
            (21302, "Genetics")]),
        (21400, "Cell and Molecular Biology", [
            (21401, "Cell Biology"),
            (21402, "Molecular Biology")])]),
    (30000, "Chemistry (all)", [
        (31600, "Chemistry (general)", [
            (31601, "Chemistry (all)"),
            (31602, "Analytical Chemistry"),
            (31603, "Organic Chemistry")]),
        (31700, "Physical Chemistry", [
            (31701, "Physical and Theoretical Chemistry"),
            (31702, "Electrochemistry")])]),
    (40000, "Computer Science (all)", [
        (41700, "Computer Science (all)", [
            (41701, "Computer Science (all)"),
            (41702, "Artificial Intelligence"),
            (41705, "Computer Networks and Communications")]),
        (41800, "Software and Information Systems", [
            (41801, "Software"),
            (41802, "Information Systems")])]),
    (50000, "Earth and Planetary Sciences (all)", [
        (51900, "Geosciences", [
            (51901, "Geology"),
            (51902, "Geophysics")]),
        (52000, "Atmospheric Sciences", [
            (52001, "Atmospheric Science"),
            (52002, "Oceanography")])]),
    (60000, "Economics, Econometrics and Finance (all)", [
        (62000, "Economics", [
            (62001, "Economics and Econometrics"),
            (62002, "Finance")]),
        (62100, "Development Studies", [
            (62101, "Development"),
            (62102, "Public Finance")])]),
    (70000, "Chemical Engineering (all)", [
        (71500, "Process Engineering", [
            (71501, "Process Chemistry and Technology"),
            (71502, "Catalysis")]),
        (71600, "Separation Science", [
            (71601, "Filtration and Separation"),
            (71602, "Fluid Flow and Transfer Processes")])]),
    (80000, "Engineering (all)", [
        (82100, "Energy (all)", [
            (82101, "Nuclear Energy and Engineering"),
            (82102, "Renewable Energy, Sustainability and the Environment")]),
        (82200, "Engineering (general)", [
            (82201, "Engineering (all)"),
            (82208, "Electrical and Electronic Engineering"),
            (82209, "Industrial and Manufacturing Engineering"),
            (82210, "Mechanical Engineering")])]),
    (90000, "Environmental Science (all)", [
        (92300, "Environmental Management", [
            (92301, "Environmental Science (all)"),
            (92310, "Pollution")]),
        (92400, "Ecology and Water", [
            (92401, "Ecology"),
            (92402, "Water Science and Technology")])]),
    (100000, "Immunology and Microbiology (all)", [
        (102400, "Immunology", [
            (102401, "Immunology"),
            (102402, "Immunology and Allergy")]),
        (102500, "Microbiology", [
            (102501, "Applied Microbiology and Biotechnology"),
            (102502, "Parasitology")])]),
    (110000, "Materials Science (all)", [
        (112500, "Materials Science (general)", [
            (112501, "Materials Science (all)"),
            (112502, "Ceramics and Composites")]),
        (112600, "Materials Physics", [
            (112601, "Electronic, Optical and Magnetic Materials"),
            (112602, "Surfaces, Coatings and Films")])]),
    (120000, "Mathematics (all)", [
        (122600, "Pure Mathematics", [
            (122601, "Algebra and Number Theory"),
            (122602, "Geometry and Topology")]),
        (122700, "Applied Mathematics", [
            (122701, "Applied Mathematics"),
            (122702, "Statistics and Probability")])]),
    (130000, "Medicine (all)", [
        (132700, "Clinical Medicine", [
            (132701, "Medicine (all)"),
            (132731, "Ophthalmology")]),
        (132800, "Public Health", [
            (132801, "Epidemiology"),
            (132802, "Public Health, Environmental and Occupational Health")])]),
    (140000, "Neuroscience (all)", [
        (142800, "Systems Neuroscience", [
            (142801, "Sensory Systems"),
            (142802, "Behavioral Neuroscience")]),
        (142900, "Cellular Neuroscience", [
            (142901, "Cellular and Molecular Neuroscience"),
            (142902, "Neurology")])]),
    (150000, "Pharmacology, Toxicology and Pharmaceutics (all)", [
        (153000, "Pharmacology", [
            (153001, "Pharmacology"),
            (153002, "Toxicology")]),
        (153100, "Pharmaceutics", [
            (153101, "Pharmaceutical Science"),
            (153102, "Drug Discovery")])]),
    (160000, "Physics and Astronomy (all)", [
        (163100, "Physics (general)", [
            (163101, "Physics and Astronomy (all)"),
            (163102, "Condensed Matter Physics"),
            (163103, "Nuclear and High Energy Physics")]),
        (163200, "Astronomy", [
            (163201, "Astronomy and Astrophysics"),
            (163202, "Instrumentation")])]),
]

INSTITUTIONS = [
    ("U01", "Capital University of Science", "ICT", 1.00, 9.0),
    ("U02", "Federal Institute of Technology", "ICT", 1.10, 4.0),
    ("U03", "Punjab College of Agriculture", "PB", 0.90, 5.0),
    ("U04", "National Engineering University", "PB", 1.00, 3.5),
    ("U05", "Lahore Institute of Sciences", "PB", 0.50, 3.0),
    ("U06", "Indus Valley University", "SD", 0.80, 3.0),
    ("U07", "Karachi Medical University", "SD", 0.70, 4.5),
    ("U08", "Frontier University", "KP", 0.60, 3.0),
    ("U09", "Hazara Valley University", "KP", 0.40, 2.5),
    ("U10", "Bolan University of Engineering", "BA", 0.35, 2.0),
    ("U11", "Nuclear Science Institute", "ICT", 0.30, 6.0),
    ("U12", "Northern Computing Institute", "ICT", 0.25, 3.5),
]

# Relative publication share per level-1 root.
ROOT_WEIGHT = {80000: 8.0, 40000: 3.0, 160000: 2.5, 30000: 2.0, 10000: 2.0,
               130000: 1.8, 110000: 1.5, 120000: 1.2, 90000: 1.0,
               20000: 1.0, 70000: 0.8, 150000: 0.7, 50000: 0.6,
               100000: 0.5, 140000: 0.4, 60000: 0.3}

ENGINEERING = 80000
AI = 41702


def leaves_by_root():
    out = {}
    for root, _, l2s in TAXONOMY:
        out[root] = [code for _, _, l3s in l2s for code, _ in l3s]
    return out


def make_journals(rng):
    by_root = leaves_by_root()
    all_leaves = [c for codes in by_root.values() for c in codes]
    journals = []
    n = 0
    for root, leaves in by_root.items():
        count = max(4, int(round(ROOT_WEIGHT[root] * 5)))
        for _ in range(count):
            n += 1
            codes = {rng.choice(leaves)}
            roll = rng.random()
            if roll < 0.12:
                codes.add(rng.choice(leaves))       # second code, same root
            elif roll < 0.22:
                codes.add(rng.choice(all_leaves))   # cross-discipline
            snip = "" if rng.random() < 0.12 else f"{rng.lognormvariate(0.0, 0.5):.3f}"
            journals.append({"journal_id": f"J{n:03d}",
                             "title": f"Journal of {rng.choice(['Applied', 'Advanced', 'International', 'Pakistan', 'Asian', 'Modern'])} Studies {n}",
                             "codes": sorted(codes), "snip": snip})
    # The multi-category example: one journal under two unrelated niche areas.
    n += 1
    journals.append({"journal_id": f"J{n:03d}", "title": "Vision Research",
                     "codes": [132731, 142801], "snip": "1.512"})
    # Deterministic journals for the crafted U12 cell.
    for k, snip in enumerate(["4.800", "4.700", "4.650", "0.210", ""]):
        n += 1
        journals.append({"journal_id": f"J{n:03d}", "title": f"Machine Intelligence Letters {k + 1}",
                         "codes": [AI], "snip": snip})
    return journals


def quartile_sets(journals):
    by_leaf = {}
    for j in journals:
        if j["snip"] == "":
            continue
        for c in j["codes"]:
            by_leaf.setdefault(c, []).append((float(j["snip"]), j["journal_id"]))
    top = {}
    for leaf, items in by_leaf.items():
        items.sort(reverse=True)
        k = math.ceil(0.25 * len(items))
        cutoff = items[k - 1][0]
        top[leaf] = {jid for s, jid in items if s >= cutoff}
    return top


def main(out_dir):
    rng = random.Random(SEED)
    journals = make_journals(rng)
    top = quartile_sets(journals)
    by_root = leaves_by_root()

    def journals_in_root(root):
        leaves = set(by_root[root])
        return [j for j in journals if leaves.intersection(j["codes"])]

    def is_top_in(j, leaves):
        return any(j["journal_id"] in top.get(c, ()) for c in leaves)

    eng_leaves = set(by_root[ENGINEERING])
    eng_top = [j for j in journals_in_root(ENGINEERING) if is_top_in(j, eng_leaves)]
    crafted_ai = [j for j in journals if j["title"].startswith("Machine Intelligence Letters")]
    ai_top = [j for j in crafted_ai if j["journal_id"] in top.get(AI, ())]
    ai_rest = [j for j in crafted_ai if j["journal_id"] not in top.get(AI, ())]
    assert ai_top and len(ai_rest) >= 2, (ai_top, ai_rest)

    pubs = []

    def add(inst, journal, cites):
        pubs.append({"institution_id": inst, "journal_id": journal["journal_id"],
                     "year": rng.choice(YEARS), "citations": cites})

    # Dominant engineering block for U01.
    for _ in range(70):
        add("U01", rng.choice(eng_top), rng.randint(15, 60))
    # Crafted AI cell for U12.
    for j in [ai_top[k % len(ai_top)] for k in range(3)] + ai_rest[-2:]:
        add("U12", j, rng.randint(0, 12))

    roots = list(ROOT_WEIGHT)
    root_w = [ROOT_WEIGHT[r] for r in roots]
    inst_w = [w for *_, w, _ in INSTITUTIONS]
    # Non-crafted journals only: the crafted AI cell must stay exactly 5 papers.
    pool = {r: [j for j in journals_in_root(r) if j not in crafted_ai] for r in roots}
    while len(pubs) < N_PUBLICATIONS:
        inst = rng.choices(INSTITUTIONS, weights=inst_w)[0]
        iid, mean = inst[0], inst[4]
        root = rng.choices(roots, weights=root_w)[0]
        if iid == "U01" and root == ENGINEERING:
            continue
        candidates = pool[root]
        if iid == "U12":
            candidates = [j for j in candidates if AI not in j["codes"]]
        journal = rng.choice(candidates)
        cites = min(int(rng.expovariate(1.0 / mean)), 14 if root == ENGINEERING else 80)
        add(iid, journal, cites)

    rng.shuffle(pubs)
    os.makedirs(out_dir, exist_ok=True)

    def writer(name):
        f = open(os.path.join(out_dir, name), "w", newline="", encoding="utf-8")
        return f, csv.writer(f, lineterminator="\n")

    f, w = writer("taxonomy.csv")
    w.writerow(["code", "name", "level", "parent_code"])
    for root, name, l2s in TAXONOMY:
        w.writerow([root, name, 1, ""])
        for l2, l2name, l3s in l2s:
            w.writerow([l2, l2name, 2, root])
            for l3, l3name in l3s:
                w.writerow([l3, l3name, 3, l2])
    f.close()

    f, w = writer("journals.csv")
    w.writerow(["journal_id", "title", "asjc_codes"])
    for j in journals:
        w.writerow([j["journal_id"], j["title"], ";".join(str(c) for c in j["codes"])])
    f.close()

    f, w = writer("snip.csv")
    w.writerow(["journal_id", "snip_2010"])
    for j in journals:
        w.writerow([j["journal_id"], j["snip"]])
    f.close()

    f, w = writer("institutions.csv")
    w.writerow(["institution_id", "name", "region"])
    for iid, name, region, *_ in INSTITUTIONS:
        w.writerow([iid, name, region])
    f.close()

    f, w = writer("publications.csv")
    w.writerow(["pub_id", "institution_id", "journal_id", "year", "citations", "title"])
    for n, p in enumerate(pubs, start=1):
        w.writerow([f"P{n:04d}", p["institution_id"], p["journal_id"], p["year"],
                    p["citations"], f"Synthetic study {n}, part \"{n % 7}\""])
    f.close()


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else
         os.path.join(os.path.dirname(__file__), "..", "data", "fixture"))
