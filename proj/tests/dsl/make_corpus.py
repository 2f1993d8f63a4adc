#!/usr/bin/env python3
"""Writes the golden .diag corpus and its manifest.

Each manifest entry names a family and its parameters; test_dsl.cpp
recomputes the expected values for each family with direct library calls.
Run from this directory: python3 make_corpus.py
"""
import json
import pathlib

OUT = pathlib.Path(__file__).parent / "corpus"


def mat(rows):
    return "[" + ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in rows) + "]"


def program(header, decls, commands):
    text = f"instance {header}\n"
    if decls:
        text += "\n" + "".join(d + "\n" for d in decls)
    if commands:
        text += "\n" + "".join(c + "\n" for c in commands)
    return text


entries = []


def emit(name, text, family, params, exit_code=0, error=None):
    (OUT / f"{name}.diag").write_text(text)
    entry = {"file": f"{name}.diag", "family": family, "params": params, "exit": exit_code}
    if error:
        entry["error"] = error
    entries.append(entry)


TRACE = "coev(X) ; s(X, dual(X)) ; ev(X)"

# finvect: categorical trace of the identity
for n in range(1, 6):
    emit(f"finvect_trace_{n}",
         program("finvect", [f"obj X = {n}"], [f"print {TRACE}", f"assert_equal {TRACE}, scalar({n})"]),
         "finvect_trace", {"n": n})

# finvect: trace pairing of two matrices
pairs = [
    ([[1, 2], [3, 4]], [[0, 1], [1, 0]]),
    ([[1, 0], [0, 1]], [[5, 7], [-2, 3]]),
    ([[2, -1], [1, 1]], [[1, 1], [1, 1]]),
    ([[1, 2, 0], [0, 1, 3], [4, 0, 1]], [[1, 0, 0], [2, 1, 0], [0, 0, -1]]),
    ([[0, 1, 0], [0, 0, 1], [1, 0, 0]], [[3, 0, 1], [0, 2, 0], [1, 0, 5]]),
]
for i, (f, g) in enumerate(pairs):
    n = len(f)
    emit(f"finvect_pairing_{i}",
         program("finvect",
                 [f"obj X = {n}", f"mor f : X -> X = {mat(f)}", f"mor g : X -> X = {mat(g)}"],
                 ["print pairing(thicken(f), g)", "print pairing(thicken(g), f)",
                  "print trace_hat(thicken(f ; g))",
                  "assert_equal pairing(thicken(f), g), pairing(thicken(g), f)"]),
         "finvect_pairing", {"f": f, "g": g})

# finvect: explicit (Z, t, b)
tuples = [
    (2, 2, [1, 0, 0, 1], [1, 0, 0, 1]),
    (2, 1, [1, 2], [3, 4]),
    (2, 3, [1, 0, 2, 0, 1, 0], [0, 1, 1, 2, 0, 1]),
    (1, 2, [2, -1], [1, 5]),
]
for i, (x, z, t, b) in enumerate(tuples):
    emit(f"finvect_tuple_{i}",
         program("finvect",
                 [f"obj X = {x}", f"obj Z = {z}",
                  f"mor t : I -> X * Z = {mat([[v] for v in t])}",
                  f"mor b : Z * X -> I = {mat([b])}",
                  "triple T : X -> X = (Z, t, b)"],
                 ["print psi(T)", "print trace_hat(T)", "print trace_hat(pre(T, psi(T)))"]),
         "finvect_tuple", {"x": x, "z": z, "t": t, "b": b})

# supervect: super dimension
for even, odd in [(1, 0), (0, 1), (1, 1), (2, 1), (1, 3)]:
    emit(f"supervect_trace_{even}_{odd}",
         program("supervect", [f"obj X = super({even}|{odd})"], [f"print {TRACE}"]),
         "supervect_trace", {"even": even, "odd": odd})

# supervect: Koszul switching
for x, y in [((0, 1), (0, 1)), ((1, 1), (0, 1)), ((1, 1), (1, 1))]:
    emit(f"supervect_switch_{x[0]}{x[1]}_{y[0]}{y[1]}",
         program("supervect", [f"obj X = super({x[0]}|{x[1]})", f"obj Y = super({y[0]}|{y[1]})"],
                 ["print s(X, Y)", "print s(X, Y) ; s(Y, X)"]),
         "supervect_switch", {"x": list(x), "y": list(y)})

# graded: categorical trace of the identity
for q, degs in [("2", {1: 1}), ("2", {-1: 2, 0: 1}), ("3", {2: 1, -2: 1}), ("1/2", {1: 2}),
                ("-2", {0: 1, 3: 1})]:
    body = ", ".join(f"{d}: {n}" for d, n in degs.items())
    emit(f"graded_trace_{len(entries)}",
         program(f"graded(q={q})", [f"obj X = graded{{{body}}}"], [f"print {TRACE}"]),
         "graded_trace", {"q": q, "degrees": [[d, n] for d, n in degs.items()]})

# graded: braiding, twist and switching
for q, dx, dy in [("2", 1, 1), ("2", 1, 2), ("3", -1, 2), ("2", 0, 3)]:
    emit(f"graded_balanced_{dx}_{dy}_{q}",
         program(f"graded(q={q})", [f"obj X = graded{{{dx}: 1}}", f"obj Y = graded{{{dy}: 1}}"],
                 ["print theta(X)", "print c(X, Y)", "print s(X, Y)", "print c(X, Y) ; c(Y, X)"]),
         "graded_balanced", {"q": q, "dx": dx, "dy": dy})

# rbord1: cutting and gluing an interval
for length in ["1", "3", "5/2", "4"]:
    emit(f"rbord_cut_{length.replace('/', '_')}",
         program("rbord1", ["obj P = pts{x}", f"mor sigma : P -> P = bord{{ x->x : {length} }}"],
                 ["print trace_hat(cut(sigma, 1/2))", "print psi(cut(sigma, 1/3))"]),
         "rbord_cut", {"length": length})

# rbord1: composition and disjoint union
bords = [
    ("bord{ a->c : 1, b->d : 2 }", "bord{ c->a : 3, d->b : 1 }"),
    ("bord{ a->d : 1, b->c : 2 }", "bord{ c->b : 1, d->a : 1 }"),
    ("bord{ a b -> : 1, -> c d : 2 }", "bord{ c d -> : 2, -> a b : 1 }"),
    ("iso{ a->d, b->c }", "bord{ c->a : 2, d->b : 3 }"),
]
for i, (f, g) in enumerate(bords):
    emit(f"rbord_compose_{i}",
         program("rbord1",
                 ["obj X = pts{a, b}", "obj Y = pts{c, d}", f"mor f : X -> Y = {f}",
                  f"mor g : Y -> X = {g}"],
                 ["print f ; g", "print f * g", "print trace_hat(cut(f ; g, 1/2))"]),
         "rbord_compose", {"f": f, "g": g})

# assertions that pass and fail
emit("assert_psi_thicken",
     program("finvect", ["obj X = 2", "mor f : X -> X = [[1, 2], [3, 4]]"],
             ["assert_equal psi(thicken(f)), f", "assert_equal id(X) ; f, f ; id(X)"]),
     "asserts", {"passed": [True, True]})
emit("assert_fails_matrix",
     program("finvect", ["obj X = 2", "mor f : X -> X = [[1, 2], [3, 4]]"],
             ["assert_equal f, id(X)", "assert_equal f, f"]),
     "asserts", {"passed": [False, True]}, exit_code=1)
emit("assert_fails_twist",
     program("graded(q=2)", ["obj X = graded{1: 1}"], ["assert_equal theta(X), id(X)"]),
     "asserts", {"passed": [False]}, exit_code=1)
emit("assert_cut_independent",
     program("rbord1", ["obj P = pts{x, y}", "mor sigma : P -> P = bord{ x->y : 2, y->x : 3 }"],
             ["assert_equal trace_hat(cut(sigma, 1/2)), trace_hat(cut(sigma, 1/4))",
              "assert_equal psi(cut(sigma, 1/2)), sigma"]),
     "asserts", {"passed": [True, True]})
emit("assert_super_symmetric",
     program("supervect", ["obj X = super(1|1)", "obj Y = super(2|1)"],
             ["assert_equal s(X, Y) ; s(Y, X), id(X * Y)"]),
     "asserts", {"passed": [True]})

# programs that parse but do not typecheck
emit("error_compose_mismatch",
     program("finvect", ["obj X = 2"], ["print coev(X) ; coev(X)"]),
     "error", {}, exit_code=2, error="5:15: type error")
emit("error_braiding_in_rbord",
     program("rbord1", ["obj X = pts{a}"], ["print c(X, X)"]),
     "error", {}, exit_code=2, error="5:7: capability error")
emit("error_unknown_name",
     program("finvect", ["obj X = 2"], ["print f ; id(X)"]),
     "error", {}, exit_code=2, error="5:7: type error")
emit("error_grading",
     program("supervect", ["obj X = super(1|1)", "mor f : X -> X = [[0, 1], [1, 0]]"], ["print f"]),
     "error", {}, exit_code=2, error="4:1: type error")
emit("error_trace_not_endo",
     program("finvect", ["obj X = 2", "obj Y = 3", "mor f : X -> Y = [[1, 0], [0, 1], [1, 1]]"],
             ["print trace_hat(thicken(f))"]),
     "error", {}, exit_code=2, error="7:7: type error")
emit("error_dual_in_rbord",
     program("rbord1", ["obj X = pts{a}"], ["print ev(X)"]),
     "error", {}, exit_code=2, error="5:7: capability error")

assert len(entries) == 50, len(entries)
(OUT / "manifest.json").write_text(json.dumps(entries, indent=2) + "\n")
print(f"wrote {len(entries)} programs")
