#
# Copyright (C) 2026 pairmult contributors
#
# SPDX-License-Identifier: LGPL-3.0-or-later
#
"""pairmult command line."""

from argparse import ArgumentParser, Namespace
import logging
from pathlib import Path
import sys
from typing import List, Optional

from pairmult import __version__
from pairmult.cli.groupfile import GroupFile
from pairmult.exceptions import PairmultError
from pairmult.groups.powers import group_prime, is_p_subgroup, powerful_embedding_check
from pairmult.groups.series import center, is_nilpotent, nilpotency_class
from pairmult.groups.subgroup import whole_group
from pairmult.multiplier.pair import BACKENDS, schur_multiplier
from pairmult.pc.consistency import consistency_check
from pairmult.utils.config import Limits
from pairmult.utils.log import setup_logging
from pairmult.verify.example21 import reproduce_example21
from pairmult.verify.report import analyze_pair
from pairmult.verify.runner import dump_report, exit_status, run_corpus
from pairmult.zlinalg.matrix import SparseIntMatrix
from pairmult.zlinalg.smith import smith_normal_form

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2

def _check(args: Namespace, limits: Limits) -> int:
	presentation = GroupFile.from_file(args.file).presentation(limits=limits)
	report = consistency_check(presentation, limits=limits)
	print(f"overlaps checked: {report.checked_overlaps}")
	for description, left, right in report.failures:
		print(f"  {description}: {presentation.format(left)} != {presentation.format(right)}")
	if not report.consistent:
		print(f"inconsistent: {len(report.failures)} failing overlap(s)")
		return EXIT_INPUT
	order = 1
	for o in presentation.orders:
		order *= o
	print(f"consistent, order {order}")
	return EXIT_OK

def _analyze(args: Namespace, limits: Limits) -> int:
	group_file = GroupFile.from_file(args.file)
	G = group_file.group(limits=limits)
	whole = whole_group(G)
	print(f"group: {G.name}")
	print(f"order: {G.order}")
	print(f"exponent: {G.exponent()}")
	print(f"abelian: {G.is_abelian()}")
	if is_nilpotent(G):
		print(f"class: {nilpotency_class(G)}")
	else:
		print("class: not nilpotent")
	print(f"center order: {center(whole).order}")

	p = group_prime(G.order) if G.order > 1 else None
	if p is not None and is_p_subgroup(whole, p):
		print(f"powerful: {powerful_embedding_check(whole, G, p).powerful}")
		for label in sorted(group_file.subgroups):
			N = group_file.subgroup(G, label)
			if not N.is_normal():
				print(f"subgroup {label}: not normal")
				continue
			flags = powerful_embedding_check(N, G, p)
			print(f"subgroup {label}: order {N.order}, exponent {N.exponent()}, "
			      f"powerfully embedded {flags.powerfully_embedded}, powerful {flags.powerful}")
	return EXIT_OK

def _multiplier(args: Namespace, limits: Limits) -> int:
	G = GroupFile.from_file(args.file).group(limits=limits)
	result = schur_multiplier(G, backend=args.backend, limits=limits)
	print(f"M({G.name}) = {result.structure}")
	print(f"backend: {result.backend}")
	return EXIT_OK

def _pair(args: Namespace, limits: Limits) -> int:
	group_file = GroupFile.from_file(args.file)
	G = group_file.group(limits=limits)
	pair = group_file.pair(G, args.n, args.k)
	report = analyze_pair(pair, p=args.p, limits=limits)

	if args.json is not None:
		text = report.to_json() + "\n"
		if args.json == "-":
			sys.stdout.write(text)
		else:
			Path(args.json).write_text(text)
	else:
		multiplier = report.multiplier.structure if report.multiplier is not None else "unavailable"
		print(f"pair: {G.name}, |G| = {report.order_G}, |N| = {report.order_N}")
		print(f"p = {report.p}, e = {report.e}, k = {report.pair_class}, m = {report.m}, class(G) = {report.class_G}")
		print(f"M(G,N) = {multiplier}")
		if report.error:
			print(f"error: {report.error}")
		for name, value in report.bounds.to_dict().items():
			print(f"bound {name}: {value}")
		for name, value in report.flags.items():
			print(f"flag {name}: {value}")
		for name, value in report.verdicts.items():
			print(f"{name}: {value}")

	return EXIT_VIOLATION if report.violations() else EXIT_OK

def _corpus(args: Namespace, limits: Limits) -> int:
	document = run_corpus(out=args.out, max_order=args.max_order, jobs=args.jobs, limits=limits)
	if args.out is None:
		sys.stdout.write(dump_report(document))
	summary = document["summary"]
	print(f"checked {summary['checked']}, violations {summary['violations']}, untested {summary['untested']}",
	      file=sys.stderr)
	return exit_status(document)

def _example21(args: Namespace, limits: Limits) -> int:
	reproduction = reproduce_example21(limits=limits)
	width = max(len(fact.name) for fact in reproduction.facts)
	for fact in reproduction.facts:
		status = "ok" if fact.holds else "MISMATCH"
		print(f"{fact.name:<{width}}  expected {fact.expected!s:<10} observed {fact.observed!s:<10} {status}")
	if reproduction.reproduced:
		print("exp(M(G,N)) = 8 does not divide exp(N) = 4: confirmed")
		return EXIT_OK
	return EXIT_VIOLATION

def _snf(args: Namespace, limits: Limits) -> int:
	matrix = SparseIntMatrix.from_text(Path(args.file).read_text())
	form = smith_normal_form(matrix, transforms=False)
	print("invariants: " + " ".join(str(d) for d in form.invariants))
	print(f"rank: {form.rank}")
	return EXIT_OK

def build_parser() -> ArgumentParser:
	parser = ArgumentParser(prog="pairmult", description="Schur multipliers of pairs of finite p-groups")
	parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
	parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging (-vv for debug)")
	subparsers = parser.add_subparsers(dest="command", required=True)

	check = subparsers.add_parser("check", help="consistency check of a pc presentation")
	check.add_argument("file")
	check.set_defaults(handler=_check)

	analyze = subparsers.add_parser("analyze", help="order, exponent, class, center and powerful flags")
	analyze.add_argument("file")
	analyze.set_defaults(handler=_analyze)

	multiplier = subparsers.add_parser("multiplier", help="Schur multiplier M(G)")
	multiplier.add_argument("file")
	multiplier.add_argument("--backend", choices=BACKENDS, default="auto")
	multiplier.set_defaults(handler=_multiplier)

	pair = subparsers.add_parser("pair", help="report on the pair (G,N)")
	pair.add_argument("file")
	pair.add_argument("--n", required=True, metavar="LABEL", help="subgroup label of N")
	pair.add_argument("--k", metavar="LABEL", help="complement label of K")
	pair.add_argument("-p", type=int, help="the prime (read off |G| by default)")
	pair.add_argument("--json", metavar="OUT", help="write the report as JSON ('-' for stdout)")
	pair.set_defaults(handler=_pair)

	corpus = subparsers.add_parser("corpus", help="verify the built-in corpus")
	corpus.add_argument("--out", metavar="FILE", help="report file (stdout by default)")
	corpus.add_argument("--max-order", type=int, metavar="N", help="skip groups larger than N")
	corpus.add_argument("--jobs", type=int, default=1, metavar="J", help="worker processes")
	corpus.set_defaults(handler=_corpus)

	example21 = subparsers.add_parser("example21", help="reproduce the order 2048 counterexample")
	example21.set_defaults(handler=_example21)

	snf = subparsers.add_parser("snf", help="Smith normal form of a matrix file")
	snf.add_argument("file")
	snf.set_defaults(handler=_snf)

	return parser

def main(argv: Optional[List[str]] = None) -> int:
	parser = build_parser()
	try:
		args = parser.parse_args(argv)
	except SystemExit as e:
		return EXIT_OK if e.code == 0 else EXIT_INPUT

	setup_logging(args.verbose)
	try:
		limits = Limits.from_env()
		return args.handler(args, limits)
	except (PairmultError, OSError, ValueError) as e:
		print(f"pairmult: error: {e}", file=sys.stderr)
		return EXIT_INPUT
