"""Hand-encoded AVMs from the displayed structures, with their glosses."""

from eventcalc.avmtext import parse_text

BUCKET_A = "[index: xa, sort: object, pred: bucket, name: A]"
THIRTY_SECONDS = "[number: 30, unit: seconds]"

FILL_FIVE_BUCKETS = (
    "[index: e0, sort: event, pred: fill, agent: jack,"
    " patient: [index: x0, sort: object, pred: bucket, card: 5],"
    " duration: [number: 20, unit: minutes]]"
)
POUR_PROCESS = (
    "[index: e1, sort: process, pred: pour, agent: jack,"
    " patient: [index: x1, sort: substance, pred: water],"
    f" goal: {BUCKET_A}, duration: {THIRTY_SECONDS}]"
)
POUR_FIVE_PRIMED = (
    "[index: e1', sort: event, pred: pour, agent: jack,"
    " patient: [index: x1', sort: object, pred: water, quantity: [number: 5, unit: gallons]],"
    f" goal: {BUCKET_A}, duration: {THIRTY_SECONDS}]"
)
POUR_THIRTY = (
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: process, pred: pour, agent: jack,"
    f"  patient: [index: x, sort: substance, pred: water], goal: {BUCKET_A}],"
    f" duration: {THIRTY_SECONDS}]"
)
POUR_FIVE = (
    "[index: e1, sort: event, pred: pour, agent: jack,"
    " patient: [index: x1, sort: object, composed-of: [index: x, sort: substance, pred: water],"
    "  quantity: [number: 5, unit: gallons]],"
    f" goal: {BUCKET_A}, duration: {THIRTY_SECONDS}]"
)
RAN_TOWARDS = (
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: process, pred: run, agent: jack,"
    "  path: [index: p, sort: non-delimited-path, pred: towards, ref-obj: [index: b, pred: bridge]]],"
    f" duration: {THIRTY_SECONDS}]"
)
RAN_TWO_MILES_TO = (
    "[index: e1, sort: event, pred: run, agent: jack,"
    " path: [index: p1, sort: delimited-path, pred: to, ref-obj: [index: b, pred: bridge]],"
    " distance: [number: 2, unit: miles]]"
)
RAN_ALONG_TWO_MILES = (
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: process, pred: run, agent: jack,"
    "  path: [index: p, sort: non-delimited-path, pred: along, ref-obj: [index: r, pred: river]]],"
    " distance: [number: 2, unit: miles]]"
)
RAN_ALONG_PROXIMAL = (
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: process, pred: run, agent: jack,"
    "  path: [index: p, sort: non-delimited-path, pred: along, ref-obj: [index: r, pred: river],"
    "   proximal-distance: [ref-obj: [index: s, pred: shore], number: 200, unit: yards]]],"
    f" duration: {THIRTY_SECONDS}]"
)
FILLED_A_BUCKET = "[index: e0, sort: event, pred: fill, agent: jack, patient: [index: x0, sort: object, pred: bucket]]"
FILLED_SOMETHING = "[index: e0, sort: event, pred: fill, agent: jack, patient: [index: x0, sort: object]]"

# starred
RAN_TO_FOR_THIRTY = (
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: event, pred: run, agent: jack,"
    "  path: [index: p, sort: delimited-path, pred: to, ref-obj: [index: b, pred: bridge]]],"
    f" duration: {THIRTY_SECONDS}]"
)
RAN_TO_FOR_TWO_MILES = (
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: event, pred: run, agent: jack,"
    "  path: [index: p, sort: delimited-path, pred: to, ref-obj: [index: b, pred: bridge]]],"
    " distance: [number: 2, unit: miles]]"
)
POUR_FIVE_FOR_THIRTY = (
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: process, pred: pour, agent: jack,"
    "  patient: [index: x1, sort: object, composed-of: [index: x, sort: substance, pred: water],"
    "   quantity: [number: 5, unit: gallons]], goal: " + BUCKET_A + "],"
    f" duration: {THIRTY_SECONDS}]"
)

# the displayed, unstarred structures
UNSTARRED = {
    "fill-five-buckets": FILL_FIVE_BUCKETS,
    "pour-process": POUR_PROCESS,
    "pour-five-primed": POUR_FIVE_PRIMED,
    "pour-thirty": POUR_THIRTY,
    "pour-five": POUR_FIVE,
    "ran-towards": RAN_TOWARDS,
    "ran-two-miles-to": RAN_TWO_MILES_TO,
    "ran-along-two-miles": RAN_ALONG_TWO_MILES,
}
STARRED = {
    "ran-to-for-thirty": RAN_TO_FOR_THIRTY,
    "ran-to-for-two-miles": RAN_TO_FOR_TWO_MILES,
    "pour-five-for-thirty": POUR_FIVE_FOR_THIRTY,
}

# gloss -> fixture the parser must produce (up to index names)
GOLDEN = [
    ("Jack filled five buckets in twenty minutes", FILL_FIVE_BUCKETS),
    ("Jack poured water into bucket A for thirty seconds", POUR_THIRTY),
    ("Jack poured water into bucket A for thirty seconds", POUR_THIRTY),
    ("Jack poured five gallons of water into bucket A in thirty seconds", POUR_FIVE),
    ("Jack ran towards the bridge for thirty seconds", RAN_TOWARDS),
    ("Jack ran along the river, two hundred yards from the shore, for thirty seconds", RAN_ALONG_PROXIMAL),
    ("Jack ran two miles to the bridge", RAN_TWO_MILES_TO),
    ("Jack ran along the river for two miles", RAN_ALONG_TWO_MILES),
    ("Jack filled a bucket", FILLED_A_BUCKET),
    ("Jack filled something", FILLED_SOMETHING),
]

# sentence -> constraint codes, at least one of which must be reported
STARRED_SENTENCES = [
    ("Jack ran to the bridge for thirty seconds", {"C1"}),
    ("Jack ran to the bridge for two miles", {"C1", "C5"}),
    ("Jack poured five gallons of water into bucket A for thirty seconds", {"C2", "C3"}),
    ("Jack filled buckets in twenty minutes", {"C7"}),
]


def load(text: str):
    return parse_text(text)
