"""Command-line interface: ``vedanga {yuga,name,tally,bignum} ...``.

Every command produces a list of flat records written as an aligned table
(default), JSON (an array of objects) or CSV (header row, same column
order).  Exact fractions are always written as ``"num/den"`` strings in
JSON and CSV; table output shows them as mixed numbers.  Columns ending
in ``_approx`` are rounded decimal renderings for reading only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Dict, List, Optional, Sequence

from . import arith, names, series, tally, yuga
from .errors import DomainError, VedangaError

FORMATS = ("table", "json", "csv")
CONFIG_ENV = "VEDANGA_CONFIG"

# Column order of every record kind; JSON objects carry exactly these keys.
COLUMNS: Dict[str, List[str]] = {
    "day": ["day", "year", "ayana", "season", "parva", "paksha", "tithi", "tithi_name",
            "moon", "moon_nakshatra", "moon_nakshatra_name",
            "sun", "sun_nakshatra", "sun_nakshatra_name"],
    "parva_end": ["parva", "phase", "time", "moon", "moon_nakshatra", "moon_nakshatra_name"],
    "segment": ["index", "name", "year", "month", "parva", "ahoratra_slot", "muhurta",
                "prati_muhurta", "label"],
    "roundtrip": ["checked", "total_segments", "ok"],
    "durations": ["unit", "minutes"],
    "split": ["total", "bodies", "size_per_body", "steps"],
    "sadaha": ["sadaha", "month", "days"],
    "event": ["day", "kind"],
    "event_count": ["kind", "count"],
    "tax": ["measures", "divisor", "tax", "kept", "remainder_untaxed", "steps"],
    "product": ["a", "b", "product", "steps", "token_steps"],
    "number": ["term", "name", "value", "power", "digits", "tradition"],
    "jain": ["factor", "value", "digits"],
    "lookup": ["value", "name", "tradition"],
}
# optional columns appended with --decimal
APPROX_COLUMNS = {"day": ["moon_approx", "sun_approx"], "parva_end": ["time_approx", "moon_approx"]}

DECIMAL_PLACES = 5


class CliError(VedangaError):
    pass


# --- rendering ---------------------------------------------------------------

def exact(x, fmt: str) -> str:
    """Exact text for a rational: mixed number in tables, ``num/den`` otherwise."""
    r = arith.reduce(x)
    if fmt == "table" and r.sign >= 0:
        return arith.format_mixed(r)
    return str(r)


def render(records: Sequence[dict], columns: Sequence[str], fmt: str, out) -> None:
    if fmt == "json":
        json.dump([{c: rec[c] for c in columns} for rec in records], out,
                  ensure_ascii=False, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=list(columns), extrasaction="ignore",
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
    else:
        cells = [[_cell(rec[c]) for c in columns] for rec in records]
        widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
        out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
        out.write("  ".join("-" * w for w in widths) + "\n")
        for row in cells:
            out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


# --- record builders -----------------------------------------------------------

def day_row(rec: yuga.DayRecord, fmt: str, nak: Dict[str, str], tithis: Dict[str, str],
            decimal: bool) -> dict:
    row = {
        "day": rec.day_index,
        "year": rec.year_in_yuga,
        "ayana": rec.ayana,
        "season": rec.season_index,
        "parva": rec.parva_index,
        "paksha": rec.tithi.paksha,
        "tithi": rec.tithi.ordinal,
        "tithi_name": rec.tithi.name(tithis),
        "moon": exact(rec.moon.arc, fmt),
        "moon_nakshatra": rec.moon.nakshatra_index + 1,
        "moon_nakshatra_name": rec.moon.name(nak),
        "sun": exact(rec.sun.arc, fmt),
        "sun_nakshatra": rec.sun.nakshatra_index + 1,
        "sun_nakshatra_name": rec.sun.name(nak),
    }
    if decimal:
        row["moon_approx"] = arith.render_decimal(rec.moon.arc, DECIMAL_PLACES)
        row["sun_approx"] = arith.render_decimal(rec.sun.arc, DECIMAL_PLACES)
    return row


def parva_end_row(k: int, fmt: str, nak: Dict[str, str], decimal: bool) -> dict:
    pos = yuga.moon_position_at_parva_end(k)
    time = yuga.parva_end_time(k)
    row = {
        "parva": k,
        "phase": yuga.parva_end_phase(k),
        "time": exact(time, fmt),
        "moon": exact(pos.arc, fmt),
        "moon_nakshatra": pos.nakshatra_index + 1,
        "moon_nakshatra_name": pos.name(nak),
    }
    if decimal:
        row["time_approx"] = arith.render_decimal(time, DECIMAL_PLACES)
        row["moon_approx"] = arith.render_decimal(pos.arc, DECIMAL_PLACES)
    return row


def segment_row(index: int, seg: names.TimeSegmentName, tables: names.NameTables) -> dict:
    row = {"index": index, "name": str(seg)}
    row.update(seg._asdict())
    row["label"] = " ".join(tables.display(seg))
    return row


def number_rows(items: Sequence[series.NamedNumber]) -> List[dict]:
    return [{
        "term": n,
        "name": item.name,
        "value": item.value,
        "power": _power_of_ten(item.value),
        "digits": arith.digit_count(item.value),
        "tradition": item.tradition,
    } for n, item in enumerate(items, start=1)]


def _power_of_ten(value: int) -> Optional[int]:
    text = str(value)
    if text[0] == "1" and set(text[1:]) <= {"0"}:
        return len(text) - 1
    return None


# --- commands ------------------------------------------------------------------

class Output:
    def __init__(self, fmt: str, quiet: bool, out, err):
        self.fmt, self.quiet, self.out, self.err = fmt, quiet, out, err

    def records(self, kind: str, records: Sequence[dict], extra: Sequence[str] = ()) -> None:
        render(records, COLUMNS[kind] + list(extra), self.fmt, self.out)

    def note(self, message: str) -> None:
        # commentary only accompanies human-readable tables
        if self.fmt == "table" and not self.quiet:
            self.out.write(message + "\n")


def cmd_yuga(args, o: Output) -> None:
    nak = yuga.nakshatra_names(args.names)
    last = yuga.DEFAULT.civil_days_per_yuga - 1
    if args.parva_ends:
        extra = APPROX_COLUMNS["parva_end"] if args.decimal else []
        rows = [parva_end_row(k, o.fmt, nak, args.decimal)
                for k in range(1, yuga.DEFAULT.parvas_per_yuga + 1)]
        o.records("parva_end", rows, extra)
        o.note(f"moon advances {arith.format_mixed(yuga.DEFAULT.moon_per_parva)} nakshatras per parva")
        return
    if args.day is not None:
        start = stop = args.day
    else:
        start = 0 if args.start is None else args.start
        stop = last if args.stop is None else args.stop
    for value, flag in ((start, "start"), (stop, "end")):
        if not 0 <= value <= last:
            raise CliError(f"{flag} day {value} outside 0..{last}")
    if start > stop:
        raise CliError(f"start day {start} is after end day {stop}")
    tithis = yuga.tithi_names(args.names)
    extra = APPROX_COLUMNS["day"] if args.decimal else []
    rows = [day_row(rec, o.fmt, nak, tithis, args.decimal)
            for rec in yuga.yuga_table(range(start, stop + 1))]
    o.records("day", rows, extra)
    if args.decimal:
        o.note("*_approx columns are rounded decimal renderings of the exact values")


def cmd_name(args, o: Output) -> None:
    rv = names.RadixVector.parse(args.radices) if args.radices else names.DEFAULT_RADICES
    tables = names.NameTables.load(args.names)
    if args.roundtrip_check:
        checked = names.roundtrip_check(rv)
        o.records("roundtrip", [{"checked": checked, "total_segments": names.total_segments(rv),
                                 "ok": True}])
        return
    if args.action == "encode":
        if not args.values:
            raise CliError("encode needs at least one index")
        rows = []
        for token in args.values:
            try:
                index = int(token)
            except ValueError:
                raise CliError(f"not an index: {token!r}") from None
            rows.append(segment_row(index, names.encode_index(index, rv), tables))
        o.records("segment", rows)
    elif args.action == "decode":
        seg = tables.parse(args.values)
        index = names.decode_name(seg, rv)
        o.records("segment", [segment_row(index, seg, tables)])
    elif args.action == "info":
        rows = [{"unit": "muhurta", "minutes": exact(names.muhurta_duration(), o.fmt)},
                {"unit": "prati_muhurta", "minutes": exact(names.segment_duration(rv), o.fmt)}]
        slot = names.ahoratra_slot_duration(rv)
        if slot is not None:
            rows.insert(0, {"unit": "ahoratra_slot", "minutes": exact(slot, o.fmt)})
        o.records("durations", rows)
        o.note(f"{names.total_segments(rv)} named segments; one prati-muhurta is "
               f"{arith.render_decimal(names.segment_duration(rv), 1)} minutes")
    else:
        raise CliError("name needs an action (encode, decode, info) or --roundtrip-check")


def cmd_tally(args, o: Output) -> None:
    action = args.action
    if action == "split":
        result = tally.equal_split(args.total, args.bodies)
        o.records("split", [_split_row(args.total, result)])
    elif action == "enumerate":
        results = tally.enumerate_splits(args.total, args.max_bodies)
        o.records("split", [_split_row(args.total, r) for r in results])
        o.note(f"{len(results)} equal splits of {args.total} with at most {args.max_bodies} bodies")
    elif action == "sadaha":
        rows, n = [], 0
        for month, length in enumerate(args.month_lengths, start=1):
            for days in tally.sadaha_partition([length]):
                n += 1
                rows.append({"sadaha": n, "month": month, "days": days})
        o.records("sadaha", rows)
    elif action == "schedule":
        lists = {"parva_days": [], "season_starts": [], "ayana_starts": []}
        if not args.plain:
            lists = tally.standard_year(args.days)
        for key in lists:
            given = getattr(args, key)
            if given is not None:
                lists[key] = given
        events = tally.gavamayana_schedule(args.days, **lists)
        if args.summary:
            counts = {kind: 0 for kind in tally.EVENT_KINDS}
            for event in events:
                counts[event.kind] += 1
            rows = [{"kind": k, "count": c} for k, c in counts.items()]
            rows.append({"kind": "total", "count": len(events)})
            o.records("event_count", rows)
        else:
            o.records("event", [{"day": e.day_index, "kind": e.kind} for e in events])
            o.note(f"{len(events)} events")
    elif action == "tax":
        r = tally.tax_in_kind(args.measures, args.divisor)
        o.records("tax", [{"measures": args.measures, "divisor": args.divisor, **r._asdict()}])
    elif action == "product":
        r = tally.repeated_addition_product(args.a, args.b)
        o.records("product", [{"a": args.a, "b": args.b, **r._asdict()}])


def _split_row(total, result: tally.SplitResult) -> dict:
    return {"total": total, "bodies": result.bodies, "size_per_body": result.size_per_body,
            "steps": result.steps}


def parse_natural(text: str) -> int:
    """Accept ``"100000000"``, ``"10^8"`` or ``"10**8"``."""
    text = text.strip().replace(",", "").replace("_", "")
    base, sep, exp = text.replace("**", "^").partition("^")
    try:
        return arith.power(int(base), int(exp)) if sep else arith.natural(int(text))
    except ValueError:
        raise DomainError(f"not a natural number: {text!r}") from None


def cmd_bignum(args, o: Output) -> None:
    rows_file = series.load_number_names(args.table) if args.table else None
    if args.action == "decimal":
        o.records("number", number_rows(series.decimal_series(rows_file)))
    elif args.action == "centesimal":
        spec = series.SeriesSpec(parse_natural(args.start), args.factor, args.terms)
        o.records("number", number_rows(series.centesimal_series(spec, rows_file)))
    elif args.action == "jain":
        j = series.jain_computation()
        rows = [{"factor": "sixth square of two", "value": j.sixth_square,
                 "digits": arith.digit_count(j.sixth_square)},
                {"factor": "fifth square of two", "value": j.fifth_square,
                 "digits": arith.digit_count(j.fifth_square)},
                {"factor": "product", "value": j.result.value, "digits": j.digits}]
        o.records("jain", rows)
        o.note(f"product equals 2^96: {j.result.value == arith.power(2, 96)}")
    elif args.action == "lookup":
        value = parse_natural(args.value)
        found = series.variant_lookup(value, rows_file)
        o.records("lookup", [{"value": value, "name": n, "tradition": t} for n, t in found])
        if not found:
            o.note(f"no recorded name for {value}")


# --- parser ----------------------------------------------------------------------

def _naturals(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text}")
    return value


def _day_list(text: str) -> List[int]:
    return [int(p) for p in text.replace(",", " ").split()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help="output format (default: table)")
    common.add_argument("--names", metavar="DIR", default=argparse.SUPPRESS,
                        help="directory of name-table files overriding the shipped ones")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="print records only, no commentary")
    common.add_argument("--config", metavar="FILE", default=argparse.SUPPRESS,
                        help=f"JSON file with default flag values (also ${CONFIG_ENV})")

    parser = argparse.ArgumentParser(prog="vedanga", parents=[common],
                                     description="Exact five-year yuga calendar and "
                                                 "proto-arithmetic computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("yuga", parents=[common], help="day records of the five-year yuga")
    p.add_argument("--day", type=int, help="a single day, 0..1829")
    p.add_argument("--from", dest="start", type=int, help="first day of a range")
    p.add_argument("--to", dest="stop", type=int, help="last day of a range (inclusive)")
    p.add_argument("--parva-ends", action="store_true", help="moon position at each of the 124 parva ends")
    p.add_argument("--decimal", action="store_true", help="add rounded decimal columns")
    p.set_defaults(func=cmd_yuga)

    p = sub.add_parser("name", parents=[common], help="encode/decode prati-muhurta names")
    p.add_argument("action", nargs="?", choices=("encode", "decode", "info"))
    p.add_argument("values", nargs="*", help="indices to encode, or six components to decode")
    p.add_argument("--radices", help="six comma-separated radices (default 5,12,2,30,15,15)")
    p.add_argument("--roundtrip-check", action="store_true",
                   help="decode every encoded index and report")
    p.set_defaults(func=cmd_name)

    p = sub.add_parser("tally", parents=[common], help="token-level procedures with step counts")
    tsub = p.add_subparsers(dest="action", required=True)
    t = tsub.add_parser("split", parents=[common])
    t.add_argument("total", type=int)
    t.add_argument("bodies", type=int)
    t = tsub.add_parser("enumerate", parents=[common])
    t.add_argument("total", type=int)
    t.add_argument("--max-bodies", type=int, default=24)
    t = tsub.add_parser("sadaha", parents=[common])
    t.add_argument("month_lengths", type=int, nargs="+")
    t = tsub.add_parser("schedule", parents=[common])
    t.add_argument("--days", type=int, default=360)
    t.add_argument("--parva-days", type=_day_list)
    t.add_argument("--season-starts", type=_day_list)
    t.add_argument("--ayana-starts", type=_day_list)
    t.add_argument("--plain", action="store_true", help="start from no parva/season/ayana days")
    t.add_argument("--summary", action="store_true", help="event counts per kind only")
    t = tsub.add_parser("tax", parents=[common])
    t.add_argument("measures", type=_naturals)
    t.add_argument("--divisor", type=int, default=6)
    t = tsub.add_parser("product", parents=[common])
    t.add_argument("a", type=_naturals)
    t.add_argument("b", type=_naturals)
    p.set_defaults(func=cmd_tally)

    p = sub.add_parser("bignum", parents=[common], help="large-number series")
    p.add_argument("--table", metavar="FILE", help="number-name table replacing the shipped one")
    bsub = p.add_subparsers(dest="action", required=True)
    bsub.add_parser("decimal", parents=[common])
    b = bsub.add_parser("centesimal", parents=[common])
    b.add_argument("--start", default="10^9")
    b.add_argument("--factor", type=int, default=100)
    b.add_argument("--terms", type=int, default=24)
    bsub.add_parser("jain", parents=[common])
    b = bsub.add_parser("lookup", parents=[common])
    b.add_argument("value")
    p.set_defaults(func=cmd_bignum)
    return parser


def load_config(path: Optional[str]) -> dict:
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read config {path}: {exc}") from None
    unknown = set(config) - {"format", "names", "quiet"}
    if unknown:
        raise CliError(f"unknown config keys: {', '.join(sorted(unknown))}")
    if config.get("format", "table") not in FORMATS:
        raise CliError(f"config format must be one of {', '.join(FORMATS)}")
    return config


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        settings = {"format": "table", "names": None, "quiet": False}
        settings.update(load_config(getattr(args, "config", None)))
        for key in settings:
            if hasattr(args, key):
                settings[key] = getattr(args, key)
        args.names = settings["names"]
        buffer = io.StringIO()
        args.func(args, Output(settings["format"], settings["quiet"], buffer, err))
    except VedangaError as exc:
        err.write(f"vedanga: error: {exc}\n")
        return 1
    out.write(buffer.getvalue())
    return 0


if __name__ == "__main__":
    sys.exit(main())
