#!/usr/bin/env python3
"""Builds data/cskb/desk.tsv, the desk-scale common-sense KB shipped with
the repo. It covers three requirement domains: environmental sensing,
course management and tactical vehicle control.

    python3 tools/data/gen_desk_kb.py > data/cskb/desk.tsv
"""

import sys

# subject -> relation -> [(object, confidence)]
KB = {
    # sensing / monitoring
    "sensor": {
        "hasProperty": [("calibrated", 0.85), ("battery-powered", 0.7), ("failure-prone", 0.6),
                        ("sampling-rate", 0.9), ("location-bound", 0.8), ("accuracy-limited", 0.75)],
        "usedFor": [("measurement", 0.95), ("monitoring", 0.9), ("detection", 0.85)],
        "madeOf": [("electronics", 0.8), ("transducer", 0.75)],
        "hasShape": [("small-box", 0.4)],
    },
    "reading": {
        "hasProperty": [("timestamped", 0.9), ("unit-bearing", 0.85), ("range-bounded", 0.8),
                        ("noisy", 0.6), ("perishable", 0.5)],
        "usedFor": [("alerting", 0.7), ("trend-analysis", 0.75), ("reporting", 0.7)],
        "motivatedByGoal": [("situational-awareness", 0.6)],
    },
    "configuration": {
        "hasProperty": [("range-bounded", 0.9), ("versioned", 0.7), ("persistent", 0.75),
                        ("validated-on-save", 0.65)],
        "usedFor": [("tuning", 0.7), ("deployment", 0.6)],
        "madeOf": [("parameter", 0.85)],
    },
    "range": {
        "hasProperty": [("minimum-bound", 0.9), ("maximum-bound", 0.9), ("unit-bearing", 0.7)],
        "usedFor": [("validation", 0.8), ("alarm-threshold", 0.75)],
    },
    "value": {
        "hasProperty": [("numeric", 0.8), ("unit-bearing", 0.75), ("timestamped", 0.6)],
        "usedFor": [("comparison", 0.6)],
    },
    "data": {
        "hasProperty": [("timestamped", 0.8), ("real-time", 0.6), ("historical", 0.6),
                        ("storage-consuming", 0.7), ("confidential", 0.4)],
        "usedFor": [("analysis", 0.85), ("display", 0.7), ("decision-making", 0.7)],
    },
    "network": {
        "hasProperty": [("bandwidth-limited", 0.8), ("latency", 0.8), ("topology", 0.7),
                        ("unreliable-links", 0.55)],
        "usedFor": [("communication", 0.9), ("data-collection", 0.8)],
        "madeOf": [("node", 0.9), ("link", 0.85)],
    },
    "node": {
        "hasProperty": [("battery-powered", 0.7), ("addressable", 0.85), ("location-bound", 0.8)],
        "usedFor": [("sensing", 0.8), ("relaying", 0.7)],
        "madeOf": [("sensor", 0.8), ("radio", 0.75), ("microcontroller", 0.7)],
    },
    "malfunction": {
        "hasProperty": [("detectable", 0.7), ("intermittent", 0.5), ("severity", 0.8)],
        "usedFor": [("maintenance-trigger", 0.6)],
        "evokesEmotion": [("concern", 0.6)],
    },
    "user": {
        "hasProperty": [("authenticated", 0.8), ("role", 0.85), ("limited-attention", 0.5),
                        ("preferences", 0.6)],
        "motivatedByGoal": [("monitor-situation", 0.7), ("make-decision", 0.7)],
    },
    "display": {
        "hasProperty": [("resolution", 0.85), ("refresh-rate", 0.75), ("legibility", 0.7),
                        ("screen-size", 0.7)],
        "usedFor": [("visualization", 0.9), ("notification", 0.6)],
        "hasShape": [("rectangle", 0.8)],
    },
    "panel": {
        "hasProperty": [("dimensions", 0.8), ("scrollable", 0.5)],
        "usedFor": [("display", 0.8), ("control", 0.6)],
        "hasShape": [("rectangle", 0.9)],
    },
    "environment": {
        "hasProperty": [("coordinate-system", 0.75), ("zoom-level", 0.6), ("layered", 0.65)],
        "usedFor": [("visualization", 0.7), ("spatial-analysis", 0.7)],
    },
    "layer": {
        "hasProperty": [("visibility", 0.85), ("ordering", 0.75), ("opacity", 0.6)],
        "usedFor": [("filtering", 0.7), ("grouping", 0.75)],
    },
    "history": {
        "hasProperty": [("retention-period", 0.9), ("storage-consuming", 0.8), ("chronological", 0.85),
                        ("queryable", 0.6)],
        "usedFor": [("audit", 0.75), ("trend-analysis", 0.8)],
    },
    "level": {
        "hasProperty": [("ordinal", 0.8), ("threshold-based", 0.75), ("scale", 0.7)],
        "usedFor": [("classification", 0.7), ("alerting", 0.65)],
    },
    "endangerment": {
        "hasProperty": [("severity", 0.7), ("probability", 0.6)],
        "evokesEmotion": [("fear", 0.6), ("urgency", 0.65)],
        "motivatedByGoal": [("safety", 0.7)],
    },
    "alarm": {
        "hasProperty": [("audible", 0.8), ("priority", 0.8), ("acknowledgeable", 0.7)],
        "usedFor": [("warning", 0.9), ("notification", 0.8)],
        "evokesEmotion": [("urgency", 0.8), ("alarm", 0.6)],
    },
    "notification": {
        "hasProperty": [("timely", 0.8), ("recipient", 0.85), ("channel", 0.7), ("priority", 0.7)],
        "usedFor": [("informing", 0.9)],
    },
    "symbol": {
        "hasProperty": [("legend", 0.7), ("color", 0.75), ("size", 0.6)],
        "usedFor": [("representation", 0.8)],
        "hasShape": [("dot", 0.6), ("icon", 0.6)],
    },
    "map": {
        "hasProperty": [("scale", 0.85), ("projection", 0.7), ("zoom-level", 0.75)],
        "usedFor": [("navigation", 0.8), ("visualization", 0.8)],
        "madeOf": [("layer", 0.8)],
        "hasShape": [("rectangle", 0.6)],
    },
    "selection": {
        "hasProperty": [("criteria", 0.75), ("multiplicity", 0.6)],
        "usedFor": [("filtering", 0.8)],
    },
    "element": {
        "hasProperty": [("identifier", 0.75), ("type", 0.7)],
        "usedFor": [("composition", 0.5)],
    },
    "temperature": {
        "hasProperty": [("unit-bearing", 0.9), ("range-bounded", 0.8), ("fluctuating", 0.6)],
        "usedFor": [("fire-detection", 0.6), ("comfort-control", 0.6)],
    },
    "humidity": {
        "hasProperty": [("percentage", 0.85), ("range-bounded", 0.75)],
        "usedFor": [("weather-monitoring", 0.7)],
    },
    "smoke": {
        "hasProperty": [("hazardous", 0.8), ("visible", 0.6)],
        "usedFor": [("fire-detection", 0.85)],
        "evokesEmotion": [("fear", 0.6)],
    },
    "forest": {
        "hasProperty": [("large-area", 0.8), ("flammable", 0.7), ("remote", 0.6)],
        "usedFor": [("habitat", 0.7)],
    },
    "home": {
        "hasProperty": [("private", 0.8), ("occupied", 0.7)],
        "usedFor": [("living", 0.9)],
        "motivatedByGoal": [("comfort", 0.7), ("safety", 0.7)],
    },
    "battery": {
        "hasProperty": [("finite-capacity", 0.9), ("degrading", 0.7), ("rechargeable", 0.6)],
        "usedFor": [("power-supply", 0.9)],
        "madeOf": [("lithium", 0.6)],
    },
    "gateway": {
        "hasProperty": [("single-point-of-failure", 0.6), ("throughput", 0.75)],
        "usedFor": [("bridging", 0.85), ("data-collection", 0.7)],
    },
    "system": {
        "hasProperty": [("availability", 0.8), ("response-time", 0.8), ("capacity", 0.7),
                        ("security", 0.75)],
        "usedFor": [("automation", 0.6)],
    },
    "interest": {
        "hasProperty": [("relevance", 0.7)],
        "motivatedByGoal": [("attention", 0.6)],
    },
    "information": {
        "hasProperty": [("accuracy", 0.75), ("freshness", 0.65), ("source", 0.7)],
        "usedFor": [("decision-making", 0.8)],
    },
    "representation": {
        "hasProperty": [("fidelity", 0.6), ("legibility", 0.6)],
        "usedFor": [("visualization", 0.7)],
    },
    "year": {
        "hasProperty": [("calendar-based", 0.7), ("twelve-months", 0.9)],
    },
    # course management
    "course": {
        "hasProperty": [("enrollment-capacity", 0.85), ("schedule", 0.85), ("instructor", 0.9),
                        ("credit-value", 0.75), ("prerequisite", 0.65)],
        "usedFor": [("teaching", 0.9), ("assessment", 0.7)],
        "madeOf": [("lecture", 0.8), ("material", 0.75), ("assignment", 0.7)],
    },
    "student": {
        "hasProperty": [("enrolled", 0.85), ("identifier", 0.8), ("grade-record", 0.8),
                        ("privacy-protected", 0.7)],
        "motivatedByGoal": [("pass-course", 0.8), ("learn", 0.75)],
        "usedFor": [("enrollment", 0.4)],
    },
    "grade": {
        "hasProperty": [("scale", 0.85), ("confidential", 0.8), ("final-or-provisional", 0.65),
                        ("appealable", 0.5)],
        "usedFor": [("assessment", 0.9), ("transcript", 0.75)],
        "evokesEmotion": [("anxiety", 0.6), ("pride", 0.5)],
    },
    "roster": {
        "hasProperty": [("up-to-date", 0.7), ("ordered", 0.6), ("confidential", 0.6)],
        "usedFor": [("attendance", 0.8), ("communication", 0.6)],
        "madeOf": [("student", 0.9)],
    },
    "material": {
        "hasProperty": [("format", 0.8), ("size", 0.7), ("copyright", 0.6), ("versioned", 0.5)],
        "usedFor": [("learning", 0.85)],
    },
    "enrollment": {
        "hasProperty": [("deadline", 0.85), ("capacity-limited", 0.8), ("approval", 0.6)],
        "usedFor": [("registration", 0.8)],
    },
    "email": {
        "hasProperty": [("recipient", 0.9), ("subject-line", 0.8), ("delivery-delay", 0.6),
                        ("size-limit", 0.6)],
        "usedFor": [("communication", 0.95), ("notification", 0.8)],
    },
    "assignment": {
        "hasProperty": [("deadline", 0.9), ("weight", 0.75), ("submission-format", 0.7)],
        "usedFor": [("assessment", 0.85), ("practice", 0.6)],
    },
    "lecture": {
        "hasProperty": [("time-slot", 0.85), ("room", 0.8), ("duration", 0.75)],
        "usedFor": [("teaching", 0.9)],
    },
    "instructor": {
        "hasProperty": [("authority", 0.7), ("workload", 0.6)],
        "motivatedByGoal": [("teach", 0.85)],
    },
    "upload": {
        "hasProperty": [("file-size", 0.85), ("file-type", 0.8), ("duration", 0.6)],
        "usedFor": [("sharing", 0.75)],
    },
    "password": {
        "hasProperty": [("secret", 0.95), ("complexity-rule", 0.8), ("expiry", 0.6)],
        "usedFor": [("authentication", 0.95)],
    },
    "account": {
        "hasProperty": [("credential", 0.85), ("role", 0.75), ("status", 0.65)],
        "usedFor": [("access", 0.85)],
    },
    "report": {
        "hasProperty": [("format", 0.8), ("period", 0.7), ("audience", 0.65)],
        "usedFor": [("communication", 0.75), ("audit", 0.6)],
    },
    "deadline": {
        "hasProperty": [("date", 0.9), ("time-zone", 0.6), ("extendable", 0.5)],
        "evokesEmotion": [("stress", 0.7)],
    },
    # tactical control
    "vehicle": {
        "hasProperty": [("position", 0.9), ("speed", 0.85), ("fuel-level", 0.75), ("payload", 0.7),
                        ("endurance", 0.7)],
        "usedFor": [("transport", 0.8), ("reconnaissance", 0.7)],
        "madeOf": [("airframe", 0.7), ("engine", 0.7)],
    },
    "aircraft": {
        "hasProperty": [("altitude", 0.9), ("heading", 0.85), ("airspeed", 0.85)],
        "usedFor": [("flight", 0.95), ("surveillance", 0.7)],
        "madeOf": [("airframe", 0.85), ("wing", 0.8)],
    },
    "mission": {
        "hasProperty": [("objective", 0.9), ("duration", 0.75), ("priority", 0.75), ("risk", 0.7)],
        "motivatedByGoal": [("accomplish-objective", 0.85)],
        "madeOf": [("waypoint", 0.7), ("task", 0.75)],
    },
    "target": {
        "hasProperty": [("location", 0.9), ("identity", 0.75), ("threat-level", 0.7)],
        "usedFor": [("tasking", 0.6)],
    },
    "payload": {
        "hasProperty": [("weight", 0.85), ("power-draw", 0.7), ("field-of-view", 0.6)],
        "usedFor": [("imaging", 0.75), ("sensing", 0.7)],
    },
    "imagery": {
        "hasProperty": [("resolution", 0.9), ("geo-referenced", 0.75), ("large-size", 0.7)],
        "usedFor": [("intelligence", 0.7), ("targeting", 0.6)],
    },
    "telemetry": {
        "hasProperty": [("update-rate", 0.85), ("latency", 0.8), ("timestamped", 0.85)],
        "usedFor": [("monitoring", 0.9)],
    },
    "operator": {
        "hasProperty": [("certified", 0.75), ("workload", 0.7), ("limited-attention", 0.6)],
        "motivatedByGoal": [("control-vehicle", 0.85)],
    },
    "datalink": {
        "hasProperty": [("bandwidth-limited", 0.85), ("encrypted", 0.7), ("range-limited", 0.8),
                        ("jammable", 0.55)],
        "usedFor": [("command", 0.85), ("telemetry", 0.85)],
    },
    "waypoint": {
        "hasProperty": [("coordinate", 0.9), ("altitude", 0.75), ("order", 0.7)],
        "usedFor": [("navigation", 0.9)],
    },
    "command": {
        "hasProperty": [("acknowledged", 0.7), ("authorized", 0.75), ("time-critical", 0.65)],
        "usedFor": [("control", 0.9)],
    },
    "control": {
        "hasProperty": [("latency", 0.7), ("authority", 0.7)],
        "usedFor": [("steering", 0.6)],
    },
    "antenna": {
        "hasProperty": [("gain", 0.8), ("orientation", 0.7)],
        "usedFor": [("communication", 0.85)],
        "hasShape": [("dish", 0.5), ("rod", 0.5)],
    },
    "weather": {
        "hasProperty": [("changeable", 0.8), ("forecastable", 0.6)],
        "usedFor": [("flight-planning", 0.7)],
        "evokesEmotion": [("caution", 0.5)],
    },
    "engine": {
        "hasProperty": [("temperature", 0.75), ("fuel-consumption", 0.8), ("rpm", 0.7)],
        "usedFor": [("propulsion", 0.9)],
        "madeOf": [("metal", 0.8)],
    },
    "fuel": {
        "hasProperty": [("flammable", 0.9), ("finite", 0.85)],
        "usedFor": [("propulsion", 0.9)],
        "hasTaste": [("bitter", 0.2)],
    },
    "record": {
        "hasProperty": [("identifier", 0.8), ("timestamped", 0.7), ("retention-period", 0.6)],
        "usedFor": [("storage", 0.8)],
    },
    "request": {
        "hasProperty": [("response-time", 0.85), ("priority", 0.6), ("origin", 0.65)],
        "usedFor": [("service-invocation", 0.8)],
    },
    "error": {
        "hasProperty": [("severity", 0.85), ("code", 0.75), ("recoverable", 0.6)],
        "usedFor": [("diagnosis", 0.7)],
        "evokesEmotion": [("frustration", 0.6)],
    },
    "alert": {
        "hasProperty": [("priority", 0.85), ("timely", 0.8), ("acknowledgeable", 0.7), ("recipient", 0.7)],
        "usedFor": [("warning", 0.85)],
        "evokesEmotion": [("urgency", 0.75)],
    },
    "threshold": {
        "hasProperty": [("numeric", 0.85), ("configurable", 0.75), ("unit-bearing", 0.7)],
        "usedFor": [("alerting", 0.8), ("classification", 0.7)],
    },
    "location": {
        "hasProperty": [("coordinate", 0.9), ("accuracy-limited", 0.6), ("address", 0.5)],
        "usedFor": [("mapping", 0.8), ("navigation", 0.7)],
    },
    "zone": {
        "hasProperty": [("boundary", 0.85), ("area", 0.75), ("risk-level", 0.6)],
        "usedFor": [("partitioning", 0.7), ("access-control", 0.5)],
    },
    "event": {
        "hasProperty": [("timestamped", 0.9), ("severity", 0.7), ("source", 0.75)],
        "usedFor": [("logging", 0.8), ("triggering", 0.7)],
    },
    "log": {
        "hasProperty": [("append-only", 0.75), ("timestamped", 0.85), ("retention-period", 0.75),
                        ("storage-consuming", 0.7)],
        "usedFor": [("audit", 0.85), ("diagnosis", 0.75)],
    },
    "dashboard": {
        "hasProperty": [("refresh-rate", 0.75), ("layout", 0.7), ("customizable", 0.6)],
        "usedFor": [("monitoring", 0.85), ("overview", 0.8)],
    },
    "device": {
        "hasProperty": [("identifier", 0.85), ("firmware-version", 0.7), ("power-source", 0.7)],
        "usedFor": [("sensing", 0.6), ("actuation", 0.6)],
    },
    "measurement": {
        "hasProperty": [("unit-bearing", 0.9), ("uncertainty", 0.75), ("timestamped", 0.8)],
        "usedFor": [("monitoring", 0.8)],
    },
    "calibration": {
        "hasProperty": [("interval", 0.8), ("reference-standard", 0.7), ("drift", 0.6)],
        "usedFor": [("accuracy", 0.85)],
    },
    "timestamp": {
        "hasProperty": [("time-zone", 0.75), ("precision", 0.7), ("monotonic", 0.5)],
        "usedFor": [("ordering", 0.85)],
    },
    "backup": {
        "hasProperty": [("frequency", 0.8), ("retention-period", 0.75), ("offsite", 0.5)],
        "usedFor": [("recovery", 0.9)],
    },
    "interface": {
        "hasProperty": [("usability", 0.75), ("protocol", 0.65), ("accessibility", 0.6)],
        "usedFor": [("interaction", 0.85)],
    },
    "screen": {
        "hasProperty": [("resolution", 0.85), ("brightness", 0.7), ("size", 0.75)],
        "usedFor": [("display", 0.9)],
        "hasShape": [("rectangle", 0.85)],
    },
    "button": {
        "hasProperty": [("label", 0.8), ("enabled-state", 0.7)],
        "usedFor": [("triggering", 0.75)],
        "hasShape": [("rectangle", 0.5), ("circle", 0.4)],
    },
    "schedule": {
        "hasProperty": [("time-slot", 0.85), ("conflict-free", 0.6), ("recurring", 0.5)],
        "usedFor": [("planning", 0.85)],
    },
    "exam": {
        "hasProperty": [("date", 0.85), ("duration", 0.8), ("weight", 0.7), ("room", 0.6)],
        "usedFor": [("assessment", 0.9)],
        "evokesEmotion": [("anxiety", 0.75)],
    },
    "transcript": {
        "hasProperty": [("official", 0.8), ("confidential", 0.75), ("cumulative", 0.6)],
        "usedFor": [("certification", 0.7)],
        "madeOf": [("grade", 0.85)],
    },
    "room": {
        "hasProperty": [("capacity", 0.85), ("location", 0.8), ("equipment", 0.6)],
        "usedFor": [("lecture", 0.7), ("meeting", 0.6)],
    },
    "feedback": {
        "hasProperty": [("timely", 0.7), ("constructive", 0.6), ("anonymous", 0.4)],
        "usedFor": [("improvement", 0.8)],
    },
    "syllabus": {
        "hasProperty": [("versioned", 0.55), ("published", 0.7)],
        "usedFor": [("planning", 0.7)],
        "madeOf": [("topic", 0.8)],
    },
    "drone": {
        "hasProperty": [("battery-powered", 0.8), ("altitude", 0.85), ("range-limited", 0.8)],
        "usedFor": [("surveillance", 0.8), ("reconnaissance", 0.75)],
        "madeOf": [("rotor", 0.7), ("airframe", 0.7)],
    },
    "radar": {
        "hasProperty": [("range-limited", 0.85), ("resolution", 0.75), ("refresh-rate", 0.7)],
        "usedFor": [("detection", 0.9), ("tracking", 0.85)],
    },
    "track": {
        "hasProperty": [("position", 0.85), ("velocity", 0.8), ("identity", 0.6)],
        "usedFor": [("situational-awareness", 0.7)],
    },
    "sortie": {
        "hasProperty": [("duration", 0.8), ("launch-time", 0.75)],
        "motivatedByGoal": [("mission-objective", 0.75)],
    },
    "uplink": {
        "hasProperty": [("bandwidth-limited", 0.8), ("latency", 0.75)],
        "usedFor": [("command", 0.85)],
    },
    "downlink": {
        "hasProperty": [("bandwidth-limited", 0.8), ("latency", 0.75)],
        "usedFor": [("telemetry", 0.85), ("imagery", 0.7)],
    },
    "camera": {
        "hasProperty": [("resolution", 0.9), ("field-of-view", 0.8), ("frame-rate", 0.75)],
        "usedFor": [("imaging", 0.9), ("surveillance", 0.75)],
        "madeOf": [("lens", 0.85), ("image-sensor", 0.8)],
    },
    "route": {
        "hasProperty": [("length", 0.8), ("ordered", 0.75), ("risk", 0.5)],
        "usedFor": [("navigation", 0.9)],
        "madeOf": [("waypoint", 0.85)],
    },
    "threat": {
        "hasProperty": [("severity", 0.8), ("proximity", 0.7), ("probability", 0.65)],
        "evokesEmotion": [("fear", 0.7)],
    },
    "status": {
        "hasProperty": [("current", 0.8), ("enumerated", 0.65)],
        "usedFor": [("monitoring", 0.75)],
    },
    "message": {
        "hasProperty": [("sender", 0.85), ("recipient", 0.85), ("size-limit", 0.6), ("priority", 0.55)],
        "usedFor": [("communication", 0.9)],
    },
    "session": {
        "hasProperty": [("timeout", 0.85), ("authenticated", 0.75), ("duration", 0.7)],
        "usedFor": [("interaction", 0.75)],
    },
    "database": {
        "hasProperty": [("capacity", 0.8), ("consistency", 0.75), ("backup-required", 0.7),
                        ("query-latency", 0.7)],
        "usedFor": [("storage", 0.95)],
    },
    "file": {
        "hasProperty": [("size", 0.85), ("format", 0.85), ("path", 0.7), ("permissions", 0.6)],
        "usedFor": [("storage", 0.85), ("exchange", 0.6)],
    },
    "power": {
        "hasProperty": [("finite", 0.6), ("voltage", 0.75)],
        "usedFor": [("operation", 0.85)],
    },
    "coffee": {
        "hasTaste": [("bitter", 0.85)],
        "usedFor": [("staying-awake", 0.7)],
        "madeOf": [("bean", 0.8)],
    },
}


def main(out):
    rows = []
    for subject, rels in KB.items():
        for relation, objs in rels.items():
            for obj, conf in objs:
                rows.append((subject, relation, obj, conf))
    rows.sort()
    subjects = {r[0] for r in rows}
    relations = {r[1] for r in rows}
    out.write("# subject<TAB>relation<TAB>object<TAB>confidence\n")
    out.write("# desk-scale KB: sensing, course management and tactical control domains\n")
    out.write("# triples: %d subjects: %d relations: %d\n" % (len(rows), len(subjects), len(relations)))
    for s, r, o, c in rows:
        out.write("%s\t%s\t%s\t%.2f\n" % (s, r, o, c))


if __name__ == "__main__":
    main(sys.stdout)
