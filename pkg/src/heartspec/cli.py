"""Command-line interface.

    heartspec build-db DIR_OR_WAV... -o train.db
    heartspec classify train.db test.wav [--top K]
    heartspec evaluate train.db|DIR [--loo | --split FRACTION]
    heartspec render-spectrogram test.wav -o spec.pgm [--level K]

All output is tab separated with numbers printed to four decimals. In the
classify ranking, rows whose label equals the decision are marked Matched.

Exit codes: 0 success, 1 other pipeline error, 2 bad usage,
3 database format error, 4 WAV decoding error, 5 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .audio_io import downmix_to_mono, normalize_peak, read_wav
from .datastore import SpectroDb, load_db, save_db
from .errors import DbFormatError, EmptyDatabase, HeartSpecError, IoFailure, WavError
from .features import FeatureMode
from .matcher import TrainingRecord, classify
from .pipeline import (
    PipelineConfig,
    class_counts,
    clip_to_pixels,
    collect_wavs,
    evaluate_leave_one_out,
    evaluate_split,
    label_from_path,
    source_id_for,
)
from .spectrogram import StftConfig, quantize, render_pgm, stft_magnitude
from .wavelet import approximation_pyramid

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_DB = 3
EXIT_WAV = 4
EXIT_IO = 5


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def _emit(out, *fields):
    out.write("\t".join(str(f) for f in fields) + "\n")


def _config(args) -> PipelineConfig:
    stft = StftConfig(args.frame_len, args.hop, args.window, args.db_floor)
    return PipelineConfig(stft, args.levels, args.feature_mode)


def _load_records(paths, cfg: PipelineConfig, err, label=None, skip_bad=False):
    records = []
    failed = 0
    for path in collect_wavs(paths):
        try:
            px = clip_to_pixels(read_wav(path), cfg.stft)
        except (HeartSpecError, OSError) as exc:
            err.write(f"{path}: {exc}\n")
            if not skip_bad:
                raise
            failed += 1
            continue
        records.append(TrainingRecord(label or label_from_path(path), px, source_id_for(path)))
    return records, failed


def cmd_build_db(args, out, err) -> int:
    cfg = _config(args)
    records, failed = _load_records(args.inputs, cfg, err, args.label, args.skip_bad)
    if not records:
        raise EmptyDatabase("no input recordings")
    db = SpectroDb(records)
    n_bytes = save_db(db, args.out)
    _emit(out, "records", len(records))
    _emit(out, "skipped", failed)
    _emit(out, "bytes", n_bytes)
    for label, n in class_counts(records).items():
        _emit(out, "label", label, n)
    for i, rec in enumerate(records):
        _emit(out, "record", f"#{i}", rec.source_id, rec.label, f"{rec.pixels.rows}x{rec.pixels.cols}")
    return EXIT_OK


def cmd_classify(args, out, err) -> int:
    cfg = _config(args)
    db = load_db(args.db)
    test_px = clip_to_pixels(read_wav(args.wav), cfg.stft)
    result = classify(test_px, db.records, cfg.n_levels, cfg.feature_mode)
    _emit(out, "best_label", result.best_label)
    _emit(out, "best_distance", _fmt(result.best_distance))
    _emit(out, "rank", "source_id", "label", "distance", "match")
    ranking = result.ranking if args.top is None else result.ranking[: args.top]
    for rank, m in enumerate(ranking, 1):
        _emit(out, rank, m.source_id, m.label, _fmt(m.distance), "Matched" if m.label == result.best_label else "Mismatched")
    return EXIT_OK


def _print_report(out, name, mode, report, verbose):
    _emit(out, "evaluation", name, "feature_mode", mode.value)
    _emit(out, "records", report.total)
    _emit(out, "correct", report.correct)
    _emit(out, "accuracy", _fmt(report.accuracy))
    for label, acc in report.per_class_accuracy().items():
        _emit(out, "class_accuracy", label, _fmt(acc))
    _emit(out, "confusion", "true\\predicted", *report.labels)
    for label, row in zip(report.labels, report.confusion):
        _emit(out, "confusion", label, *(int(v) for v in row))
    if verbose:
        for source_id, truth, pred, dist in report.predictions:
            _emit(out, "prediction", source_id, truth, pred, _fmt(dist))


def cmd_evaluate(args, out, err) -> int:
    cfg = _config(args)
    source = Path(args.source)
    if source.is_dir():
        records, _ = _load_records([source], cfg, err, skip_bad=args.skip_bad)
    else:
        records = load_db(source).records

    modes = list(FeatureMode) if args.both_modes else [cfg.feature_mode]
    for mode in modes:
        if args.split is None:
            report = evaluate_leave_one_out(records, cfg.n_levels, mode)
            name = "leave-one-out"
        else:
            report = evaluate_split(records, args.split, cfg.n_levels, mode)
            name = f"split-{args.split:g}"
        _print_report(out, name, mode, report, args.verbose)
    return EXIT_OK


def cmd_render(args, out, err) -> int:
    cfg = _config(args)
    spec = stft_magnitude(normalize_peak(downmix_to_mono(read_wav(args.wav))), cfg.stft)
    px = quantize(spec)
    if args.level:
        # the approximation band is real valued; requantize it for display
        px = quantize(approximation_pyramid(px.pixels, args.level)[args.level])
    data = render_pgm(px)
    try:
        Path(args.out).write_bytes(data)
    except OSError as exc:
        raise IoFailure(f"cannot write {args.out}: {exc}") from exc
    _emit(out, "image", args.out, f"{px.rows}x{px.cols}")
    return EXIT_OK


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _fraction(text):
    value = float(text)
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(f"expected a fraction in (0, 1), got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    g = shared.add_argument_group("pipeline")
    g.add_argument("--frame-len", type=_positive_int, default=256, help="STFT frame length, power of two (default 256)")
    g.add_argument("--hop", type=_positive_int, default=128, help="STFT hop in samples (default 128)")
    g.add_argument("--window", choices=["hann", "rect"], default="hann")
    g.add_argument("--db-floor", type=float, default=-100.0, help="dB clamp (default -100)")
    g.add_argument("--levels", type=_positive_int, default=4, help="Haar decomposition levels (default 4)")
    g.add_argument("--feature-mode", choices=["all", "last"], default="all",
                   help="row means from all levels (default) or the last level only")

    parser = argparse.ArgumentParser(prog="heartspec", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-db", parents=[shared], help="build a spectrogram database from WAV files")
    p.add_argument("inputs", nargs="*", help="WAV files or directories (searched recursively)")
    p.add_argument("-o", "--out", required=True, help="database file to write")
    p.add_argument("--label", help="label for every input (default: parent directory name)")
    p.add_argument("--skip-bad", action="store_true", help="skip unreadable files instead of failing")
    p.set_defaults(func=cmd_build_db)

    p = sub.add_parser("classify", parents=[shared], help="classify one recording against a database")
    p.add_argument("db")
    p.add_argument("wav")
    p.add_argument("--top", type=_positive_int, help="show only the K closest records")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evaluate", parents=[shared], help="accuracy and confusion matrix")
    p.add_argument("source", help="database file or directory of labelled WAVs")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--loo", action="store_true", help="leave-one-out over all records (default)")
    mode.add_argument("--split", type=_fraction, metavar="FRACTION",
                      help="per class, first FRACTION of records train and the rest test")
    p.add_argument("--both-modes", action="store_true", help="report all-level and last-level features")
    p.add_argument("--skip-bad", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true", help="print every prediction")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("render-spectrogram", parents=[shared], help="write the spectrogram image as PGM")
    p.add_argument("wav")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--level", type=_positive_int, help="render the level-K approximation instead")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except DbFormatError as exc:
        err.write(f"heartspec: database error: {exc}\n")
        return EXIT_DB
    except WavError as exc:
        err.write(f"heartspec: WAV error: {exc}\n")
        return EXIT_WAV
    except (IoFailure, OSError) as exc:
        err.write(f"heartspec: I/O error: {exc}\n")
        return EXIT_IO
    except (HeartSpecError, ValueError) as exc:
        err.write(f"heartspec: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
