#!/usr/bin/env python3
"""Regenerate the bundled review corpus and mini-treebank.

Both fixtures are drawn from one small review grammar whose terminals carry
Penn Treebank tags, so every treebank token is tagged by construction.
Output is deterministic for a given --seed.

    python3 scripts/gen_fixtures.py            # writes crates/core/data/
    python3 scripts/recount_manifest.py        # recomputes manifest.csv
"""

import argparse
import datetime as dt
import json
import os
import random

CATEGORIES = ["Mobiles", "Computers", "FlashDrives", "Electronics"]

PARTS = {
    "Mobiles": ["phone", "battery", "screen", "camera", "charger", "signal",
                "case", "mobile", "speaker", "display", "sensor"],
    "Computers": ["laptop", "keyboard", "processor", "fan", "touchpad",
                  "display", "computer", "screen", "trackpad", "charger",
                  "webcam", "hinge"],
    "FlashDrives": ["drive", "stick", "cap", "port", "capacity", "storage",
                    "connector", "case", "plug", "casing"],
    "Electronics": ["speaker", "remote", "sound", "bass", "volume",
                    "headset", "cable", "adapter", "subwoofer", "microphone",
                    "battery"],
}

COMPOUNDS = {
    "Mobiles": [("battery", "life"), ("screen", "quality"), ("battery", "backup"),
                ("camera", "quality")],
    "Computers": [("battery", "life"), ("build", "quality"), ("screen", "quality"),
                  ("customer", "service")],
    "FlashDrives": [("transfer", "speed"), ("build", "quality"),
                    ("customer", "service"), ("write", "speed")],
    "Electronics": [("sound", "quality"), ("battery", "life"),
                    ("build", "quality"), ("customer", "service")],
}

BRANDS = {
    "Mobiles": ["Samsung", "Motorola", "Nokia", "Xiaomi", "Apple"],
    "Computers": ["Lenovo", "Dell", "Asus", "HP", "Acer"],
    "FlashDrives": ["SanDisk", "Kingston", "Samsung", "Lexar", "PNY"],
    "Electronics": ["Sony", "Bose", "JBL", "Anker", "Philips"],
}

PRODUCTS = {
    "Mobiles": ["SM-G960U", "MOTO-G6", "NOKIA-6.1", "REDMI-NOTE-5", "IPHONE-8", "SM-J737"],
    "Computers": ["THINKPAD-T480", "INSPIRON-15", "VIVOBOOK-S15", "PAVILION-14", "ASPIRE-E5"],
    "FlashDrives": ["ULTRA-64GB", "DATATRAVELER-32GB", "BAR-PLUS-128GB", "JUMPDRIVE-S75"],
    "Electronics": ["SRS-XB10", "SOUNDLINK-MINI", "FLIP-4", "SOUNDCORE-2", "SHP-9500"],
}

GENERIC_NN = ["price", "quality", "design", "delivery", "packaging", "seller",
              "warranty", "size", "color", "value", "product", "item", "box",
              "manual", "setup", "material", "performance", "speed"]

NNS = ["apps", "files", "photos", "videos", "games", "songs", "movies",
       "features", "updates", "buttons", "cables", "ports", "problems",
       "issues", "reviews", "friends"]

POS_JJ = ["good", "great", "excellent", "amazing", "nice", "perfect", "solid",
          "fast", "bright", "clear", "sturdy", "reliable", "smooth",
          "responsive", "comfortable", "beautiful", "awesome", "fantastic",
          "wonderful", "impressive", "decent", "superb", "crisp"]
NEG_JJ = ["bad", "terrible", "awful", "poor", "slow", "faulty", "useless",
          "horrible", "weak", "flimsy", "noisy", "dim", "disappointing",
          "defective", "annoying", "unreliable", "fragile", "laggy",
          "worthless", "cheap", "mediocre", "buggy"]
NEU_JJ = ["new", "old", "small", "big", "black", "white", "red", "second",
          "first", "other", "whole", "extra", "standard", "silver", "plastic",
          "metal", "wireless", "portable"]
POS_JJR = ["better", "faster", "brighter", "clearer", "lighter", "easier", "louder"]
NEG_JJR = ["worse", "slower", "heavier", "weaker", "noisier"]
POS_JJS = ["best", "fastest", "brightest", "nicest"]
NEG_JJS = ["worst", "slowest", "weakest"]
INT = ["very", "really", "so", "quite", "extremely", "pretty", "super"]
WELL = ["well", "perfectly", "flawlessly", "smoothly", "fine", "nicely"]
BADLY = ["badly", "poorly", "terribly"]
CD = ["two", "three", "five", "ten", "2", "3", "4", "6", "10", "12"]
UNITS_CD = ["16", "32", "64", "128", "256"]
TIME_NNS = ["days", "weeks", "months", "hours"]
TIME_NN = ["day", "week", "month"]
REL = ["wife", "son", "daughter", "husband", "mother", "father", "office", "brother"]
DAY = ["Monday", "Tuesday", "Friday", "Saturday", "Sunday"]
PRICE = ["5.99", "19.99", "24.50", "49", "129.99", "249", "12.95", "399"]
LOVE_V = ["love", "like", "enjoy", "adore"]
HATE_V = ["hate", "dislike", "regret"]

# A template is a list of items. Each item is either a "word/TAG" literal or a
# "@slot" expanded by `expand`. Slots ending in "?" may expand to nothing.

POS_TEMPLATES = [
    "@DET @NNC is/VBZ @INT? @POSJJ ./.",
    "I/PRP @LOVEVBP this/DT @NNC ./.",
    "I/PRP really/RB @LOVEVBP it/PRP !/.",
    "I/PRP love/VBP it/PRP ./.",
    "The/DT @NNC works/VBZ @WELL ./.",
    "It/PRP is/VBZ the/DT @POSJJS @NNC I/PRP have/VBP ever/RB @OWNED ./.",
    "The/DT @NNC is/VBZ @POSJJR than/IN my/PRP$ old/JJ one/NN ./.",
    "I/PRP would/MD recommend/VB it/PRP to/TO anyone/NN ./.",
    "I/PRP highly/RB recommend/VBP this/DT @NNC ./.",
    "@BRAND did/VBD a/DT @POSJJ job/NN with/IN the/DT @NNC ./.",
    "They/PRP improved/VBD the/DT @NNC a/DT lot/NN ./.",
    "@BRAND improved/VBD the/DT @NNC this/DT year/NN ./.",
    "The/DT @NNC has/VBZ improved/VBN a/DT lot/NN ./.",
    "The/DT improved/JJ @NNC is/VBZ @POSJJ ./.",
    "I/PRP like/VBP the/DT improved/JJ @NNC ./.",
    "Worth/JJ every/DT penny/NN !/.",
    "The/DT @NNC and/CC the/DT @NNC are/VBP both/DT @POSJJ ./.",
    "It/PRP arrived/VBD @ARRIVED and/CC works/VBZ @WELL ./.",
    "@POSJJCAP @NNC for/IN the/DT price/NN ./.",
    "I/PRP am/VBP very/RB happy/JJ with/IN this/DT @NNC ./.",
    "Wow/UH ,/, this/DT @NNC is/VBZ @POSJJ !/.",
    "My/PRP$ @REL @LOVEVBZ the/DT @NNC ./.",
    "There/EX is/VBZ nothing/NN @NEGJJ about/IN this/DT @NNC ./.",
    "The/DT @NNC is/VBZ not/RB @NEGJJ at/IN all/DT ./.",
    "It/PRP does/VBZ n't/RB feel/VB @NEGJJ ./.",
    "I/PRP have/VBP been/VBN using/VBG it/PRP for/IN @CD @TIMENNS and/CC it/PRP still/RB works/VBZ @WELL ./.",
    "It/PRP charges/VBZ faster/RBR than/IN my/PRP$ old/JJ @NNC ./.",
    "The/DT @NNC works/VBZ better/RBR now/RB ./.",
    "This/DT is/VBZ the/DT most/RBS @POSJJ @NNC I/PRP own/VBP ./.",
    "It/PRP is/VBZ more/RBR @POSJJ than/IN I/PRP expected/VBD ./.",
    "No/DT @NNS so/RB far/RB ,/, the/DT @NNC is/VBZ @POSJJ ./.",
    "I/PRP 'm/VBP @INT? pleased/JJ with/IN the/DT @NNC ./.",
    "It/PRP 's/VBZ a/DT @POSJJ @NNC ./.",
    "The/DT @NNC on/IN this/DT @NNC is/VBZ @INT? @POSJJ ./.",
]

NEG_TEMPLATES = [
    "@DET @NNC is/VBZ @INT? @NEGJJ ./.",
    "@NNCCAP backup/NN of/IN this/DT @NNC is/VBZ too/RB @NEGJJ ./.",
    "Battery/NN backup/NN of/IN this/DT mobile/NN is/VBZ too/RB bad/JJ ./.",
    "I/PRP @HATEVBP this/DT @NNC ./.",
    "I/PRP hate/VBP it/PRP ./.",
    "I/PRP do/VBP n't/RB like/VB it/PRP ./.",
    "The/DT @NNC stopped/VBD working/VBG after/IN @CD @TIMENNS ./.",
    "It/PRP is/VBZ the/DT @NEGJJS @NNC I/PRP have/VBP ever/RB bought/VBN ./.",
    "The/DT @NNC is/VBZ @NEGJJR than/IN my/PRP$ old/JJ @NNC ./.",
    "Do/VB not/RB buy/VB this/DT @NNC ./.",
    "I/PRP returned/VBD it/PRP because/IN the/DT @NNC was/VBD @NEGJJ ./.",
    "The/DT @NNC is/VBZ not/RB @POSJJ ./.",
    "The/DT @NNC is/VBZ not/RB very/RB @POSJJ ./.",
    "Very/RB @NEGJJ @NNC ,/, @NEGJJ quality/NN ./.",
    "@BRAND should/MD be/VB ashamed/JJ of/IN this/DT @NNC ./.",
    "Waste/NN of/IN money/NN ./.",
    "The/DT @NNC broke/VBD within/IN a/DT @TIMENN ./.",
    "The/DT @NNC died/VBD after/IN @CD @TIMENNS ./.",
    "I/PRP am/VBP so/RB disappointed/JJ with/IN the/DT @NNC ./.",
    "It/PRP gets/VBZ hot/JJ and/CC the/DT @NNC is/VBZ @NEGJJ ./.",
    "I/PRP regret/VBP buying/VBG this/DT @NNC ./.",
    "Not/RB worth/JJ the/DT money/NN ./.",
    "The/DT @NNC does/VBZ n't/RB work/VB with/IN my/PRP$ @NNC ./.",
    "The/DT @NNC works/VBZ @BADLY ./.",
    "It/PRP never/RB works/VBZ @WELL ./.",
    "The/DT @NNC failed/VBD on/IN the/DT @ORD day/NN ./.",
    "I/PRP ca/MD n't/RB recommend/VB this/DT @NNC ./.",
    "The/DT @NNC is/VBZ less/RBR @POSJJ than/IN the/DT @BRAND one/NN ./.",
    "It/PRP 's/VBZ a/DT @NEGJJ @NNC !/.",
    "Why/WRB is/VBZ the/DT @NNC so/RB @NEGJJ ?/.",
]

NEU_TEMPLATES = [
    "The/DT box/NN contains/VBZ a/DT @NNC ./.",
    "The/DT box/NN contains/VBZ a/DT charger/NN ./.",
    "I/PRP bought/VBD this/DT @NNC for/IN my/PRP$ @REL ./.",
    "It/PRP is/VBZ okay/JJ ./.",
    "It/PRP 's/VBZ okay/JJ ./.",
    "The/DT @NNC arrived/VBD on/IN @DAY ./.",
    "It/PRP comes/VBZ with/IN a/DT @NNC and/CC a/DT @NNC ./.",
    "The/DT price/NN was/VBD $/$ @PRICE ./.",
    "I/PRP paid/VBD $/$ @PRICE for/IN it/PRP ./.",
    "I/PRP use/VBP it/PRP every/DT day/NN ./.",
    "It/PRP has/VBZ @UNITSCD gigabytes/NNS of/IN storage/NN ./.",
    "My/PRP$ @REL uses/VBZ it/PRP for/IN @ACT ./.",
    "I/PRP ordered/VBD it/PRP on/IN @DAY and/CC it/PRP came/VBD @CAME ./.",
    "Who/WP knows/VBZ how/WRB long/RB it/PRP will/MD last/VB ?/.",
    "The/DT @NNC is/VBZ @NEUJJ and/CC @NEUJJ ./.",
    "It/PRP does/VBZ what/WP it/PRP says/VBZ ./.",
    "I/PRP set/VBD it/PRP up/RP in/IN @CD minutes/NNS ./.",
    "Which/WDT @NNC should/MD I/PRP get/VB ?/.",
    "The/DT @NNC ,/, which/WDT came/VBD in/IN the/DT box/NN ,/, is/VBZ @NEUJJ ./.",
    "When/WRB I/PRP turned/VBD it/PRP on/RP ,/, the/DT @NNC was/VBD @NEUJJ ./.",
    "The/DT @NNC 's/POS @NNC is/VBZ @NEUJJ ./.",
    "It/PRP 's/VBZ a/DT @NEUJJ @NNC (/( @UNITSCD GB/NNP )/) ./.",
    "I/PRP 'm/VBP not/RB sure/JJ yet/RB ./.",
    "Oh/UH well/UH ,/, it/PRP is/VBZ what/WP it/PRP is/VBZ ./.",
    "I/PRP have/VBP n't/RB tried/VBN the/DT @NNC yet/RB ;/: maybe/RB later/RB ./.",
    "All/PDT the/DT @NNS work/VBP ./.",
    "I/PRP ca/MD n't/RB say/VB much/JJ yet/RB ./.",
    "We/PRP wo/MD n't/RB know/VB until/IN next/JJ @TIMENN ./.",
    "It/PRP works/VBZ with/IN @BRAND ,/, @BRAND ,/, etc/FW ./.",
    "The/DT @NNC is/VBZ @NEUJJ ./.",
    "I/PRP got/VBD the/DT @NEUJJ one/NN ./.",
    "It/PRP fits/VBZ in/IN my/PRP$ pocket/NN ./.",
    "You/PRP need/VBP a/DT @NNC to/TO use/VB it/PRP ./.",
    "The/DT @NNC is/VBZ made/VBN of/IN plastic/NN ./.",
    "I/PRP will/MD update/VB this/DT review/NN later/RB ./.",
    "It/PRP took/VBD @CD days/NNS to/TO arrive/VB ./.",
    "The/DT seller/NN shipped/VBD it/PRP from/IN @BRAND 's/POS warehouse/NN ./.",
    "Whose/WP$ idea/NN was/VBD this/DT @NNC ?/.",
]

MIX_TEMPLATES = [
    "The/DT @NNC is/VBZ @POSJJ but/CC the/DT @NNC is/VBZ @NEGJJ ./.",
    "@NNCCAP is/VBZ @POSJJ but/CC @NNC is/VBZ @NEGJJ ./.",
    "Screen/NN is/VBZ great/JJ but/CC battery/NN is/VBZ bad/JJ ./.",
    "It/PRP is/VBZ @POSJJ ,/, but/CC the/DT @NNC could/MD be/VB @POSJJR ./.",
    "The/DT @NNC is/VBZ @POSJJR than/IN the/DT @BRAND one/NN ,/, but/CC the/DT price/NN is/VBZ @NEGJJ ./.",
    "I/PRP @LOVEVBP the/DT @NNC ,/, but/CC I/PRP @HATEVBP the/DT @NNC ./.",
    "Overall/RB ,/, a/DT @NEUJJ @NNC for/IN the/DT money/NN ./.",
    "The/DT @NNC is/VBZ @NEGJJ ,/, yet/CC the/DT @NNC is/VBZ @POSJJ ./.",
    "Good/JJ @NNC ,/, @NEGJJ @NNC ./.",
    "It/PRP is/VBZ better/JJR than/IN my/PRP$ old/JJ phone/NN ,/, but/CC the/DT @NNC is/VBZ @NEGJJ ./.",
]


def cap(word):
    return word[:1].upper() + word[1:]


class Grammar:
    def __init__(self, rng, category):
        self.rng = rng
        self.category = category

    def pick(self, items):
        return self.rng.choice(items)

    def nnc(self):
        # Product part, sometimes a noun-noun compound.
        if self.rng.random() < 0.2:
            first, second = self.pick(COMPOUNDS[self.category])
            return [(first, "NN"), (second, "NN")]
        if self.rng.random() < 0.15:
            return [(self.pick(GENERIC_NN), "NN")]
        return [(self.pick(PARTS[self.category]), "NN")]

    def slot(self, name):
        r = self.pick
        if name == "DET":
            return [(r(["the", "this", "my", "the", "the"]), None)]
        if name == "NNC":
            return self.nnc()
        if name == "NNCCAP":
            toks = self.nnc()
            toks[0] = (cap(toks[0][0]), toks[0][1])
            return toks
        if name == "NNS":
            return [(r(NNS), "NNS")]
        if name == "BRAND":
            return [(r(BRANDS[self.category]), "NNP")]
        if name == "POSJJ":
            return [(r(POS_JJ), "JJ")]
        if name == "POSJJCAP":
            return [(cap(r(POS_JJ)), "JJ")]
        if name == "NEGJJ":
            return [(r(NEG_JJ), "JJ")]
        if name == "NEUJJ":
            return [(r(NEU_JJ), "JJ")]
        if name == "POSJJR":
            return [(r(POS_JJR), "JJR")]
        if name == "NEGJJR":
            return [(r(NEG_JJR), "JJR")]
        if name == "POSJJS":
            return [(r(POS_JJS), "JJS")]
        if name == "NEGJJS":
            return [(r(NEG_JJS), "JJS")]
        if name == "INT":
            return [(r(INT), "RB")]
        if name == "WELL":
            return [(r(WELL), "RB")]
        if name == "BADLY":
            return [(r(BADLY), "RB")]
        if name == "CD":
            return [(r(CD), "CD")]
        if name == "UNITSCD":
            return [(r(UNITS_CD), "CD")]
        if name == "TIMENNS":
            return [(r(TIME_NNS), "NNS")]
        if name == "TIMENN":
            return [(r(TIME_NN), "NN")]
        if name == "REL":
            return [(r(REL), "NN")]
        if name == "DAY":
            return [(r(DAY), "NNP")]
        if name == "PRICE":
            return [(r(PRICE), "CD")]
        if name == "LOVEVBP":
            return [(r(LOVE_V), "VBP")]
        if name == "LOVEVBZ":
            return [(r(LOVE_V) + "s", "VBZ")]
        if name == "HATEVBP":
            return [(r(HATE_V), "VBP")]
        if name == "OWNED":
            return [(r(["owned", "used", "had", "bought"]), "VBN")]
        if name == "ORD":
            return [(r(["first", "second", "third"]), "JJ")]
        if name == "ARRIVED":
            return r([[("quickly", "RB")], [("early", "RB")], [("on", "IN"), ("time", "NN")]])
        if name == "CAME":
            return r([[("yesterday", "NN")], [("today", "NN")], [("early", "RB")], [("late", "RB")]])
        if name == "ACT":
            return r([[("work", "NN")], [("school", "NN")], [("gaming", "NN")],
                      [("music", "NN")], [("movies", "NNS")]])
        raise KeyError(name)

    def expand(self, template):
        out = []
        for item in template.split():
            if item.startswith("@"):
                name = item[1:]
                if name.endswith("?"):
                    if self.rng.random() < 0.4:
                        continue
                    name = name[:-1]
                for word, tag in self.slot(name):
                    if tag is None:
                        tag = "PRP$" if word == "my" else "DT"
                    out.append((word, tag))
            else:
                word, tag = item.rsplit("/", 1)
                out.append((word, tag))
        first_word, first_tag = out[0]
        out[0] = (cap(first_word), first_tag)
        return out


ATTACH_LEFT = {".", ",", "!", "?", ";", ":", ")", "n't", "'s", "'m", "'re", "'ve", "'ll", "'d"}
ATTACH_RIGHT = {"(", "$"}


def detokenize(tokens):
    text = ""
    glue = False
    for word, _ in tokens:
        if text and not glue and word not in ATTACH_LEFT:
            text += " "
        text += word
        glue = word in ATTACH_RIGHT
    return text


GROUP_WEIGHTS = {
    5: (0.75, 0.05, 0.15, 0.05),
    4: (0.60, 0.05, 0.22, 0.13),
    3: (0.22, 0.22, 0.34, 0.22),
    2: (0.08, 0.60, 0.20, 0.12),
    1: (0.04, 0.76, 0.15, 0.05),
}
GROUPS = [POS_TEMPLATES, NEG_TEMPLATES, NEU_TEMPLATES, MIX_TEMPLATES]


def review_text(rng, category, rating):
    grammar = Grammar(rng, category)
    n = rng.randint(2, 5)
    sentences = []
    if rating == 3 and rng.random() < 0.3:
        sentences.append(detokenize(grammar.expand("It/PRP 's/VBZ okay/JJ ./.")))
    while len(sentences) < n:
        group = rng.choices(GROUPS, weights=GROUP_WEIGHTS[rating])[0]
        sentences.append(detokenize(grammar.expand(rng.choice(group))))
    return " ".join(sentences)


def reviewer_pool(rng, size):
    alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
    pool = set()
    while len(pool) < size:
        pool.add("A" + "".join(rng.choice(alphabet) for _ in range(13)))
    return sorted(pool)


def generate_reviews(rng, count):
    reviewers = reviewer_pool(rng, 430)
    start = dt.datetime(2018, 8, 1, tzinfo=dt.timezone.utc)
    span = int((dt.datetime(2019, 1, 1, tzinfo=dt.timezone.utc) - start).total_seconds())
    out = []
    for i in range(count):
        category = rng.choices(CATEGORIES, weights=[0.34, 0.24, 0.18, 0.24])[0]
        rating = rng.choices([1, 2, 3, 4, 5], weights=[0.18, 0.10, 0.12, 0.25, 0.35])[0]
        ts = start + dt.timedelta(seconds=rng.randrange(span))
        out.append({
            "review_id": "R%04d" % (i + 1),
            "reviewer_id": rng.choice(reviewers),
            "product_model": rng.choice(PRODUCTS[category]),
            "timestamp": ts.strftime("%Y-%m-%dT%H:%M:%SZ"),
            "rating": rating,
            "category": category,
            "text": review_text(rng, category, rating),
        })
    return out


FIXED_TREEBANK = [
    "They/PRP improved/VBD the/DT battery/NN ./.",
    "The/DT improved/JJ battery/NN lasts/VBZ longer/RBR ./.",
    "Battery/NN backup/NN of/IN this/DT mobile/NN is/VBZ too/RB bad/JJ ./.",
    "I/PRP love/VBP it/PRP ./.",
    "I/PRP hate/VBP it/PRP ./.",
    "I/PRP do/VBP n't/RB like/VB it/PRP ./.",
    "I/PRP like/VBP it/PRP ./.",
    "It/PRP 's/VBZ okay/JJ ./.",
    "The/DT box/NN contains/VBZ a/DT charger/NN ./.",
    "It/PRP is/VBZ better/JJR than/IN my/PRP$ old/JJ phone/NN ./.",
    "Screen/NN is/VBZ great/JJ but/CC battery/NN is/VBZ bad/JJ ./.",
    "The/DT love/NN of/IN music/NN brought/VBD me/PRP here/RB ./.",
    "It/PRP costs/VBZ $/$ 5.99/CD today/NN ./.",
    "The/DT `/`` cheap/JJ '/'' charger/NN failed/VBD ./.",
    "Two/CD stars/NNS -/HYPH that/DT is/VBZ all/DT ./.",
    "Price/NN :/: $/$ 20/CD ./.",
    "AirPods/NNPS are/VBP better/JJR ./.",
    "Rating/NN :/: 4/CD +/SYM stars/NNS ./.",
    "Who/WP knows/VBZ ?/.",
    "The/DT drive/NN runs/VBZ fast/RB ./.",
    "The/DT drive/NN is/VBZ fast/JJ ./.",
]


def generate_treebank(rng, target_tokens):
    lines = []
    tokens = 0
    for tpl in FIXED_TREEBANK:
        pairs = [tuple(t.rsplit("/", 1)) for t in tpl.split()]
        lines.append(pairs)
        tokens += len(pairs)
    while tokens < target_tokens:
        category = rng.choice(CATEGORIES)
        group = rng.choice(GROUPS)
        pairs = Grammar(rng, category).expand(rng.choice(group))
        lines.append(pairs)
        tokens += len(pairs)
    rng.shuffle(lines)
    return lines


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=2018)
    parser.add_argument("--out", default=os.path.join(here, "..", "crates", "core", "data"))
    parser.add_argument("--reviews", type=int, default=500)
    parser.add_argument("--treebank-tokens", type=int, default=3000)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    os.makedirs(args.out, exist_ok=True)

    with open(os.path.join(args.out, "reviews.jsonl"), "w", encoding="utf-8", newline="\n") as f:
        for review in generate_reviews(rng, args.reviews):
            f.write(json.dumps(review, ensure_ascii=False) + "\n")

    with open(os.path.join(args.out, "treebank.txt"), "w", encoding="utf-8", newline="\n") as f:
        f.write("# Product-review mini-treebank: one sentence per line, surface_TAG pairs.\n")
        for pairs in generate_treebank(rng, args.treebank_tokens):
            f.write(" ".join("%s_%s" % (w, t) for w, t in pairs) + "\n")


if __name__ == "__main__":
    main()
