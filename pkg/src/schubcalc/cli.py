"""Command-line frontend.

Exit codes: 0 success, 2 parse error, 3 precondition violation,
4 resource bound exceeded.  Subcommands accept --json for canonical JSON
output; heavy commands take --max-n and --timeout guards.  The report
subcommand writes delimited CSV output with matplotlib figures alongside.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import shlex
import signal
import sys
from fractions import Fraction

from . import (bpd, bruhat, geom, hecke, minors, perm, permarray, pipedream,
               puzzle, schub, schubitope, stanley)
from .poly import IntPolynomial

CACHE_ENV = "SCHUBCALC_CACHE"

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_RESOURCE = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _perm(text: str) -> perm.Perm:
    try:
        return perm.parse(text)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc


def _partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "-", "0"):
        return ()
    try:
        return stanley.normalize_partition(
            [int(t) for t in text.split(",")])
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",")) if text else ()
    except ValueError as exc:
        raise CliError(f"bad integer list {text!r}", EXIT_PARSE) from exc


def _check_max_n(args, *perms, base: int = 0) -> None:
    n = max([base] + [len(w) for w in perms])
    if n > args.max_n:
        raise CliError(
            f"input size {n} exceeds --max-n={args.max_n}", EXIT_RESOURCE)


def _emit(args, text: str, payload=None) -> None:
    if getattr(args, "json", False) and payload is not None:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _poly_payload(f: IntPolynomial) -> dict:
    return {"terms": [{"exponents_x": list(xe), "exponents_y": list(ye),
                       "coeff": str(c)}
                      for (xe, ye), c in f.sorted_terms()]}


# ---------------------------------------------------------------------------
# handlers


def cmd_schub(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w)
    f = schub.schubert(w)
    _emit(args, str(f), _poly_payload(f))


def cmd_dschub(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w)
    f = schub.double_schubert(w)
    _emit(args, str(f), _poly_payload(f))


def cmd_expand(args) -> None:
    try:
        f = parse_poly(args.poly)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    exp = schub.expand_in_schubert_basis(f)
    _emit(args, str(exp), exp.to_json_dict())


def cmd_mult(args) -> None:
    u, v = _perm(args.u), _perm(args.v)
    _check_max_n(args, u, v)
    exp = schub.multiply(u, v)
    _emit(args, str(exp), exp.to_json_dict())


def cmd_cuvw(args) -> None:
    u, v, w = _perm(args.u), _perm(args.v), _perm(args.w)
    _check_max_n(args, u, v, w)
    c = schub.structure_constant(u, v, w)
    _emit(args, str(c), {"coeff": c})


def cmd_monk(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w, base=args.r)
    exp = schub.monk_product(args.r, w)
    _emit(args, str(exp), exp.to_json_dict())


def cmd_pieri(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w, base=args.b + args.d)
    try:
        exp = schub.pieri_product(args.kind, args.b, args.d, w)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    _emit(args, str(exp), exp.to_json_dict())


def cmd_pipedreams(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w)
    dreams = sorted(pipedream.enumerate_pipe_dreams(w),
                    key=lambda D: sorted(D.crossings))
    n = max(len(w), 1)
    if args.render:
        from . import viz
        viz.draw_pipe_dream_gallery(dreams, args.render,
                                    title=perm.pretty(w))
    text = "\n\n".join(D.ascii(n) for D in dreams)
    payload = {"perm": perm.pretty(w), "count": len(dreams),
               "pipe_dreams": [sorted(list(map(list, D.crossings)))
                               for D in dreams]}
    _emit(args, f"{text}\n# {len(dreams)} pipe dreams", payload)


def cmd_bpd(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w)
    ds = sorted(bpd.enumerate_bpds(w), key=lambda D: D.tiles)
    if args.render:
        from . import viz
        viz.draw_bpd(ds[0], args.render, title=perm.pretty(w))
    if args.asm:
        blocks = ["\n".join(" ".join(f"{v:2d}" for v in row)
                            for row in bpd.to_asm(D)) for D in ds]
    else:
        blocks = [D.ascii() for D in ds]
    payload = {"perm": perm.pretty(w), "count": len(ds),
               "tilings": [D.ascii().splitlines() for D in ds]}
    _emit(args, "\n\n".join(blocks) + f"\n# {len(ds)} bumpless pipe dreams",
          payload)


def cmd_bump(args) -> None:
    word = _ints(args.word)
    bound = _ints(args.bound) if args.bound else word
    direction = +1 if args.direction in ("+", "+1", "up") else -1
    try:
        res = pipedream.bounded_bump(word, bound, args.t, direction)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    text = (f"word:    {','.join(map(str, res.word))}\n"
            f"bound:   {','.join(map(str, res.bound))}\n"
            f"row:     {res.row}\ncol:     {res.col}\n"
            f"outcome: {res.outcome}")
    _emit(args, text, {"word": list(res.word), "bound": list(res.bound),
                       "row": res.row, "col": res.col,
                       "outcome": res.outcome})


def cmd_mitosis(args) -> None:
    D = _parse_pd(args.pipedream)
    offspring = sorted(pipedream.mitosis(D, args.row),
                       key=lambda E: sorted(E.crossings))
    text = "\n\n".join(E.ascii() for E in offspring) if offspring else "(none)"
    _emit(args, text,
          {"count": len(offspring),
           "offspring": [sorted(map(list, E.crossings)) for E in offspring]})


def _parse_pd(text: str) -> pipedream.PipeDream:
    try:
        if "," in text or ";" in text:
            pairs = [p for p in text.replace(";", " ").split() if p]
            cells = [tuple(int(x) for x in p.split(",")) for p in pairs]
            return pipedream.PipeDream.of(cells)
        return pipedream.PipeDream.parse(text.replace("/", "\n"))
    except (ValueError, IndexError) as exc:
        raise CliError(f"bad pipe dream {text!r}", EXIT_PARSE) from exc


def cmd_stanley(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w)
    exp = stanley.stanley(w)
    _emit(args, str(exp), exp.to_json_dict())


def cmd_egr(args) -> None:
    word = _ints(args.word)
    try:
        p, q = stanley.eg_insert(word)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    text = "P: " + " / ".join(",".join(map(str, r)) for r in p) + \
        "\nQ: " + " / ".join(",".join(map(str, r)) for r in q)
    _emit(args, text, {"P": [list(r) for r in p], "Q": [list(r) for r in q]})


def cmd_lrcoef(args) -> None:
    lam, mu = _partition(args.lam), _partition(args.mu)
    exp = stanley.lr_via_transition(lam, mu)
    if args.nu is not None:
        nu = _partition(args.nu)
        c = exp.get(nu, 0)
        _emit(args, str(c), {"coeff": c})
    else:
        _emit(args, str(exp), exp.to_json_dict())


def cmd_puzzle(args) -> None:
    n = args.n
    try:
        k = args.k or _infer_k(n, args.I, args.J, args.K)
        prefer = args.k is not None
        bI = _boundary(args.I, n, k, prefer)
        bJ = _boundary(args.J, n, k, prefer)
        bK = _boundary(args.K, n, k, prefer)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    count, found = puzzle.fill_puzzles(bI, bJ, bK, collect=bool(args.render))
    if args.render and found:
        from . import viz
        viz.draw_puzzle(found[0], args.render)
    _emit(args, str(count), {"count": count})


def _infer_k(n: int, *texts: str) -> int | None:
    """The common subset size, read off any non-partition argument."""
    for text in texts:
        text = text.strip()
        if set(text) <= {"0", "1"} and len(text) == n:
            return text.count("0")
        vals = [int(t) for t in text.split(",")]
        if all(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            return len(vals)
    return None


def _boundary(text: str, n: int, k: int | None = None,
              prefer_partition: bool = False) -> tuple[int, ...]:
    """Accept a binary word, an increasing subset, or a partition.

    With an explicit --k every comma list is read as a partition.
    """
    text = text.strip()
    if set(text) <= {"0", "1"} and len(text) == n:
        return tuple(int(c) for c in text)
    vals = [int(t) for t in text.split(",")]
    decreasing = all(vals[i] >= vals[i + 1] for i in range(len(vals) - 1))
    increasing = all(vals[i] < vals[i + 1] for i in range(len(vals) - 1))
    if decreasing and (prefer_partition or not increasing):
        if k is None:
            raise ValueError("partition boundaries need --k")
        return puzzle.subset_to_word(
            puzzle.partition_to_subset([v for v in vals if v], k, n), n)
    if increasing:
        return puzzle.subset_to_word(vals, n)
    raise ValueError(f"cannot read boundary {text!r} for n={n}")


def cmd_horn(args) -> None:
    if args.n > args.max_n:
        raise CliError(f"n exceeds --max-n={args.max_n}", EXIT_RESOURCE)
    system = puzzle.horn_facets(args.n, parallel=args.parallel)
    if args.alpha:
        try:
            a = [Fraction(t) for t in args.alpha.split(",")]
            b = [Fraction(t) for t in args.beta.split(",")]
            c = [Fraction(t) for t in args.gamma.split(",")]
        except (ValueError, ZeroDivisionError, AttributeError) as exc:
            raise CliError("bad rational sequences", EXIT_PARSE) from exc
        try:
            ok = puzzle.horn_member(a, b, c, system)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PRECONDITION) from exc
        _emit(args, "member" if ok else "not-member", {"member": ok})
        return
    text = "\n".join(str(f) for f in system.facets)
    _emit(args, text + f"\n# {len(system.facets)} facets + trace equality",
          system.to_json_dict())


def cmd_bruhat(args) -> None:
    v, w = _perm(args.v), _perm(args.w)
    ok = bruhat.bruhat_leq(v, w)
    _emit(args, "true" if ok else "false", {"leq": ok})


def cmd_interval(args) -> None:
    u, w = _perm(args.u), _perm(args.w)
    _check_max_n(args, u, w)
    try:
        iv = bruhat.interval(u, w)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    if args.render:
        from . import viz
        viz.draw_hasse(iv, args.render,
                       title=f"[{perm.pretty(u)}, {perm.pretty(w)}]")
    lines = [f"# {len(iv.elements)} elements, "
             f"rank sizes {iv.rank_sizes()}"]
    size = max(len(w), 1)
    for a, b in sorted(iv.cover_edges):
        lines.append(f"{perm.pretty(a, size)} < {perm.pretty(b, size)}")
    _emit(args, "\n".join(lines), iv.to_json_dict())


def cmd_poincare(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w)
    p = bruhat.poincare_polynomial(w)
    _emit(args, p.format("t", ascending=True),
          {"coeffs": geom.poincare_coeffs(w)})


def cmd_kl(args) -> None:
    if args.table is not None:
        if args.table > args.max_n:
            raise CliError("table size exceeds --max-n", EXIT_RESOURCE)
        rows = []
        for w, p in sorted(hecke.kl_table(args.table).items(),
                           key=lambda kv: (perm.length(kv[0]), kv[0])):
            rows.append(f"{perm.pretty(w, args.table)}\t{p}")
        _emit(args, "\n".join(rows),
              {perm.pretty(w, args.table): str(p)
               for w, p in hecke.kl_table(args.table).items()})
        return
    if args.v is None or args.w is None:
        raise CliError("kl needs two permutations or --table N", EXIT_PARSE)
    v, w = _perm(args.v), _perm(args.w)
    _check_max_n(args, v, w)
    p = hecke.kl_polynomial(v, w)
    _emit(args, str(p), {"polynomial": str(p)})


def cmd_rpoly(args) -> None:
    v, w = _perm(args.v), _perm(args.w)
    _check_max_n(args, v, w)
    p = hecke.r_polynomial(v, w)
    _emit(args, str(p), {"polynomial": str(p)})


def cmd_smooth(args) -> None:
    if args.count is not None:
        if args.count > args.max_n:
            raise CliError("count size exceeds --max-n", EXIT_RESOURCE)
        c = geom.count_smooth(args.count)
        _emit(args, str(c), {"count": c})
        return
    if args.perm is None:
        raise CliError("smooth needs a permutation or --count N", EXIT_PARSE)
    w = _perm(args.perm)
    ok = geom.is_smooth(w)
    _emit(args, "smooth" if ok else "singular", {"smooth": ok})


def cmd_singular_locus(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w)
    rep = geom.singular_locus(w)
    if rep.smooth:
        _emit(args, "smooth", rep.to_json_dict())
    else:
        text = " ".join(perm.pretty(v) for v in sorted(rep.maximal_singular))
        _emit(args, text, rep.to_json_dict())


def cmd_bk_test(args) -> None:
    v, w = _perm(args.v), _perm(args.w)
    _check_max_n(args, v, w)
    try:
        ok = geom.bk_smooth_test(v, w)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    _emit(args, "smooth" if ok else "singular", {"smooth": ok})


def cmd_isom_classes(args) -> None:
    if args.d > args.max_n:
        raise CliError("d exceeds --max-n", EXIT_RESOURCE)
    total, connected = geom.isomorphism_counts(args.d)
    _emit(args, f"I({args.d})={total} CI({args.d})={connected}",
          {"I": total, "CI": connected})


def cmd_poincare_factor(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w)
    exps = geom.poincare_factor(w)
    if exps is None:
        _emit(args, "non-factorable", {"factorable": False})
    else:
        _emit(args, ",".join(map(str, exps)),
              {"factorable": True, "exponents": exps})


def cmd_plucker(args) -> None:
    m = _read_matrix(args)
    try:
        coords = minors.plucker(m)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    text = "x".join("[" + ":".join(str(x) for x in block) + "]"
                    for block in coords)
    _emit(args, text,
          {"plucker": [[str(x) for x in block] for block in coords]})


def cmd_minors(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w)
    # the ambient size matters for the essential set; keep the written one
    if args.n:
        n = args.n
    elif "," in args.perm:
        n = len(args.perm.split(","))
    else:
        n = len(args.perm.strip())
    n = max(n, len(w), 1)
    cells, specs = minors.essential_minors(w, n)
    lines = ["essential: " + " ".join(f"({i},{j})" for i, j in cells)]
    for spec, r in specs:
        lines.append(f"{spec} rank<={r}")
    _emit(args, "\n".join(lines),
          {"essential": [list(c) for c in cells],
           "minors": [{"rows": list(s.rows), "cols": list(s.cols),
                       "rank_bound": r} for s, r in specs]})


def cmd_matrix_schubert(args) -> None:
    w = _perm(args.perm)
    m = _read_matrix(args)
    ok = minors.matrix_schubert_member(m, w)
    _emit(args, "member" if ok else "not-member", {"member": ok})


def _read_matrix(args) -> minors.Matrix:
    try:
        if args.matrix == "-":
            return minors.parse_csv(sys.stdin.read())
        if os.path.exists(args.matrix):
            with open(args.matrix) as fh:
                return minors.parse_csv(fh.read())
        return minors.parse_csv(args.matrix.replace(";", "\n"))
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad matrix input: {exc}", EXIT_PARSE) from exc


def cmd_permarray(args) -> None:
    if args.generate:
        n, d = args.generate
        if n ** d > 4 ** 3 + 1 and n > args.max_n:
            raise CliError("array size exceeds --max-n", EXIT_RESOURCE)
        try:
            arrays = permarray.el_generate(n, d)
        except ResourceWarning as exc:
            raise CliError(str(exc), EXIT_RESOURCE) from exc
        text = "\n\n".join(a.ascii() for a in arrays)
        _emit(args, text + f"\n# {len(arrays)} arrays",
              {"count": len(arrays),
               "arrays": [a.to_json_dict() for a in arrays]})
        return
    P = _parse_dots(args.dots, args.n, args.d)
    if args.rank_at:
        y = _ints(args.rank_at)
        r = permarray.rank_of(P, y)
        _emit(args, "not-rankable" if r is None else str(r),
              {"rank": r})
        return
    ok = permarray.is_permutation_array(P)
    _emit(args, "permutation-array" if ok else "not-permutation-array",
          {"permutation_array": ok})


def _parse_dots(text: str, n: int, d: int) -> permarray.DotArray:
    try:
        dots = [tuple(int(x) for x in tok.split(","))
                for tok in text.split(";") if tok.strip()]
        return permarray.DotArray.of(n, d, dots)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc


def cmd_schubitope(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w)
    if args.alpha is None:
        pts = sorted(schubitope.lattice_points(w))
        _emit(args, "\n".join(",".join(map(str, p)) for p in pts),
              {"lattice_points": [list(p) for p in pts]})
        return
    alpha = _ints(args.alpha)
    member = schubitope.schubitope_member(alpha, w)
    nonzero = schubitope.coefficient_nonzero(w, alpha)
    _emit(args,
          f"member={'true' if member else 'false'} "
          f"coefficient_nonzero={'true' if nonzero else 'false'}",
          {"member": member, "coefficient_nonzero": nonzero})


def cmd_zero_one(args) -> None:
    w = _perm(args.perm)
    ok = schubitope.zero_one(w)
    _emit(args, "true" if ok else "false", {"zero_one": ok})


def cmd_word_stats(args) -> None:
    w = _perm(args.perm)
    _check_max_n(args, w)
    st = pipedream.word_stats(w)
    text = (f"reduced_words: {st.reduced_words}\n"
            f"pipe_dreams: {st.pipe_dreams}\n"
            f"product_identity: {'ok' if st.product_identity_ok else 'FAILED'}\n"
            f"q_identity: {'ok' if st.q_identity_ok else 'FAILED'}")
    _emit(args, text, {"reduced_words": st.reduced_words,
                       "pipe_dreams": st.pipe_dreams,
                       "product_identity": st.product_identity_ok,
                       "q_identity": st.q_identity_ok})


def cmd_report(args) -> None:
    from . import viz
    os.makedirs(args.out, exist_ok=True)
    kind = args.kind
    csv_path = os.path.join(args.out, f"{kind}.csv")
    png_path = os.path.join(args.out, f"{kind}.png")
    if kind == "smooth-counts":
        rows = [(n, geom.count_smooth(n)) for n in range(args.n + 1)]
        _write_csv(csv_path, ["n", "smooth"], rows)
        viz.draw_counts(rows, png_path, "n", "smooth permutations",
                        title="Smooth Schubert varieties by rank")
    elif kind == "pipedreams":
        w = _perm(args.perm)
        dreams = sorted(pipedream.enumerate_pipe_dreams(w),
                        key=lambda D: sorted(D.crossings))
        rows = [(idx, "".join(f"({i},{j})" for i, j in sorted(D.crossings)),
                 str(D.monomial()))
                for idx, D in enumerate(dreams, 1)]
        _write_csv(csv_path, ["index", "crossings", "monomial"], rows)
        viz.draw_pipe_dream_gallery(dreams, png_path,
                                    title=f"pipe dreams of {args.perm}")
    elif kind == "bpds":
        w = _perm(args.perm)
        ds = sorted(bpd.enumerate_bpds(w), key=lambda D: D.tiles)
        rows = [(idx, "/".join(D.ascii().splitlines()), str(D.monomial()))
                for idx, D in enumerate(ds, 1)]
        _write_csv(csv_path, ["index", "tiles", "monomial"], rows)
        viz.draw_bpd(ds[0], png_path, title=f"Rothe tiling of {args.perm}")
    elif kind == "interval":
        u, w = _perm(args.u), _perm(args.perm)
        iv = bruhat.interval(u, w)
        rows = [(perm.pretty(a), perm.pretty(b))
                for a, b in sorted(iv.cover_edges)]
        _write_csv(csv_path, ["lower", "upper"], rows)
        viz.draw_hasse(iv, png_path,
                       title=f"[{perm.pretty(u)}, {perm.pretty(w)}]")
    elif kind == "kl-classes":
        n = args.n
        table = hecke.kl_table(n)
        rows = [(perm.pretty(w, n), str(p)) for w, p in
                sorted(table.items(), key=lambda kv: (perm.length(kv[0]),
                                                      kv[0]))]
        _write_csv(csv_path, ["perm", "kl_polynomial"], rows)
        buckets: dict[str, int] = {}
        for _, p in rows:
            buckets[p] = buckets.get(p, 0) + 1
        viz.draw_counts(
            [(i, c) for i, (_, c) in enumerate(sorted(buckets.items()))],
            png_path, "polynomial class", "count",
            title=f"Kazhdan-Lusztig classes in S_{n}", log=False)
    else:
        raise CliError(f"unknown report kind {kind!r}", EXIT_PARSE)
    print(csv_path)
    print(png_path)


def _write_csv(path: str, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def cmd_batch(args) -> None:
    worst = EXIT_OK
    for line in sys.stdin:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        code = dispatch(shlex.split(line))
        worst = max(worst, code)
    if worst:
        raise CliError("batch had failures", worst)


# ---------------------------------------------------------------------------
# polynomial parsing (canonical text form)


def parse_poly(text: str) -> IntPolynomial:
    """Read sums of terms like "2*x1^2*x2" or "(x1+x2)^4" with + - * ^."""
    import re
    tokens = re.findall(r"\(|\)|\^|\*|\+|-|[xy]\d+|\d+", text.replace(" ", ""))
    if not tokens:
        raise ValueError("empty polynomial")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_sum():
        node = parse_product(1)
        while peek() in ("+", "-"):
            op = take()
            node = node + parse_product(-1 if op == "-" else 1)
        return node

    def parse_product(sign: int):
        node = IntPolynomial.const(sign)
        factors = 0
        while True:
            tok = peek()
            if tok is None or tok in ("+", "-", ")"):
                if factors == 0:
                    raise ValueError("missing term")
                return node
            if tok == "*":
                take()
                continue
            node = node * parse_power()
            factors += 1

    def parse_power():
        base = parse_atom()
        if peek() == "^":
            take()
            exp = take()
            if exp is None or not exp.isdigit():
                raise ValueError("bad exponent")
            return base ** int(exp)
        return base

    def parse_atom():
        tok = take()
        if tok == "(":
            node = parse_sum()
            if take() != ")":
                raise ValueError("unbalanced parentheses")
            return node
        if tok.isdigit():
            return IntPolynomial.const(int(tok))
        if tok and tok[0] == "x":
            return IntPolynomial.x(int(tok[1:]))
        if tok and tok[0] == "y":
            return IntPolynomial.y(int(tok[1:]))
        raise ValueError(f"unexpected token {tok!r}")

    node = parse_sum()
    if pos != len(tokens):
        raise ValueError("trailing input")
    return node


# ---------------------------------------------------------------------------
# argument parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="schubcalc",
        description="Exact Schubert calculus for the symmetric group.")
    ap.add_argument("--json", action="store_true",
                    help="emit canonical JSON")
    ap.add_argument("--max-n", type=int, default=8,
                    help="resource guard on input sizes (default 8)")
    ap.add_argument("--timeout", type=int, default=0,
                    help="wall-clock guard in seconds (0 = off)")
    ap.add_argument("--parallel", action="store_true",
                    help="opt-in parallel enumeration where supported")
    ap.add_argument("--cache", default=None,
                    help=f"cache directory (or ${CACHE_ENV})")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("schub", cmd_schub, help="Schubert polynomial")
    p.add_argument("perm")
    p = add("dschub", cmd_dschub, help="double Schubert polynomial")
    p.add_argument("perm")
    p = add("expand", cmd_expand, help="expand a polynomial in the basis")
    p.add_argument("poly")
    p = add("mult", cmd_mult, help="product of two basis elements")
    p.add_argument("u")
    p.add_argument("v")
    p = add("cuvw", cmd_cuvw, help="structure constant")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("w")
    p = add("monk", cmd_monk, help="degree-one product expansion")
    p.add_argument("r", type=int)
    p.add_argument("perm")
    p = add("pieri", cmd_pieri, help="row/column Pieri expansion")
    p.add_argument("kind", choices=["row", "column"])
    p.add_argument("b", type=int)
    p.add_argument("d", type=int)
    p.add_argument("perm")
    p = add("pipedreams", cmd_pipedreams, help="enumerate pipe dreams")
    p.add_argument("perm")
    p.add_argument("--render", default=None, metavar="PNG")
    p = add("bpd", cmd_bpd, help="enumerate bumpless pipe dreams")
    p.add_argument("perm")
    p.add_argument("--asm", action="store_true",
                   help="print signed matrices instead of tiles")
    p.add_argument("--render", default=None, metavar="PNG")
    p = add("bump", cmd_bump, help="bounded bump on a word")
    p.add_argument("word")
    p.add_argument("t", type=int)
    p.add_argument("direction", choices=["+", "-", "+1", "-1", "up", "down"])
    p.add_argument("--bound", default=None)
    p = add("mitosis", cmd_mitosis, help="mitosis offspring of a pipe dream")
    p.add_argument("pipedream",
                   help="cells '1,1;2,3' or rows '++./+../..'")
    p.add_argument("row", type=int)
    p = add("stanley", cmd_stanley, help="Schur expansion of the stable limit")
    p.add_argument("perm")
    p = add("egr", cmd_egr, help="insertion tableaux of a reduced word")
    p.add_argument("word")
    p = add("lrcoef", cmd_lrcoef, help="Littlewood-Richardson expansion")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu", nargs="?", default=None)
    p = add("puzzle", cmd_puzzle, help="triangular puzzle count")
    p.add_argument("n", type=int)
    p.add_argument("I", help="binary word '0101', subset '1,3', or"
                   " partition '2,1'")
    p.add_argument("J")
    p.add_argument("K")
    p.add_argument("--k", type=int, default=None,
                   help="subset size when all boundaries are partitions")
    p.add_argument("--render", default=None, metavar="PNG")
    p = add("horn", cmd_horn, help="eigenvalue inequalities / membership")
    p.add_argument("n", type=int)
    p.add_argument("--alpha", default=None)
    p.add_argument("--beta", default=None)
    p.add_argument("--gamma", default=None)
    p = add("bruhat", cmd_bruhat, help="order comparison")
    p.add_argument("v")
    p.add_argument("w")
    p = add("interval", cmd_interval, help="interval with cover edges")
    p.add_argument("u")
    p.add_argument("w")
    p.add_argument("--render", default=None, metavar="PNG")
    p = add("poincare", cmd_poincare, help="cell-count generating polynomial")
    p.add_argument("perm")
    p = add("poincare-factor", cmd_poincare_factor,
            help="factorization into 1 + t + ... + t^e blocks")
    p.add_argument("perm")
    p = add("kl", cmd_kl, help="Kazhdan-Lusztig polynomial")
    p.add_argument("v", nargs="?", default=None)
    p.add_argument("w", nargs="?", default=None)
    p.add_argument("--table", type=int, default=None,
                   help="print P for the identity against all of S_n")
    p = add("rpoly", cmd_rpoly, help="R-polynomial")
    p.add_argument("v")
    p.add_argument("w")
    p = add("smooth", cmd_smooth, help="smoothness test / counts")
    p.add_argument("perm", nargs="?", default=None)
    p.add_argument("--count", type=int, default=None)
    p = add("singular-locus", cmd_singular_locus,
            help="maximal singular strata")
    p.add_argument("perm")
    p = add("bk-test", cmd_bk_test, help="pointwise smoothness by"
            " specialized double Schubert polynomial")
    p.add_argument("v")
    p.add_argument("w")
    p = add("isom-classes", cmd_isom_classes,
            help="isomorphism classes by dimension")
    p.add_argument("d", type=int)
    p = add("plucker", cmd_plucker, help="projective flag coordinates")
    p.add_argument("matrix", help="CSV rows 'a,b;c,d', a file, or -")
    p = add("minors", cmd_minors, help="essential set and defining minors")
    p.add_argument("perm")
    p.add_argument("--n", type=int, default=None)
    p = add("matrix-schubert", cmd_matrix_schubert,
            help="rank-table membership")
    p.add_argument("perm")
    p.add_argument("matrix")
    p = add("permarray", cmd_permarray, help="dot array operations")
    p.add_argument("--dots", default="")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--rank-at", default=None)
    p.add_argument("--generate", type=int, nargs=2, default=None,
                   metavar=("N", "D"))
    p = add("schubitope", cmd_schubitope, help="Newton polytope membership")
    p.add_argument("perm")
    p.add_argument("--alpha", default=None)
    p = add("zero-one", cmd_zero_one, help="all coefficients in {0,1}?")
    p.add_argument("perm")
    p = add("word-stats", cmd_word_stats,
            help="reduced word counts and specialization identities")
    p.add_argument("perm")
    p = add("report", cmd_report,
            help="write CSV output with matplotlib figures alongside")
    p.add_argument("kind", choices=["smooth-counts", "pipedreams", "bpds",
                                    "interval", "kl-classes"])
    p.add_argument("--out", default="report")
    p.add_argument("--perm", default="1432")
    p.add_argument("--u", default="1")
    p.add_argument("--n", type=int, default=5)
    add("batch", cmd_batch, help="read one command per line from stdin")
    return ap


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    cache = args.cache or os.environ.get(CACHE_ENV)
    if cache:
        os.makedirs(cache, exist_ok=True)
        schub.configure_cache(os.path.join(cache, "schubert.jsonl"))
    if args.timeout:
        def _alarm(signum, frame):
            raise CliError("timeout exceeded", EXIT_RESOURCE)
        signal.signal(signal.SIGALRM, _alarm)
        signal.alarm(args.timeout)
    try:
        args.fn(args)
        return EXIT_OK
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ResourceWarning as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    finally:
        if args.timeout:
            signal.alarm(0)


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
