use pyo3::prelude::*;
use pyo3::types::{PyDict, PyModule};

fn run(code: &std::ffi::CStr) {
    Python::attach(|py| {
        let module = PyModule::new(py, "cuoco").unwrap();
        cuoco::cuoco(&module).unwrap();
        let globals = PyDict::new(py);
        globals.set_item("cuoco", module).unwrap();
        globals.set_item("math", py.import("math").unwrap()).unwrap();
        if let Err(e) = py.run(code, Some(&globals), None) {
            e.display(py);
            panic!("python assertion failed");
        }
    });
}

#[test]
fn obtuse_pair_areas() {
    run(c"
t = cuoco.Triangle.from_sides(2, 3, 4)
assert t.classify() == ('obtuse', 'C')
d = cuoco.decompose(t)
for got, want in zip(d.pair_areas, (-1.5, 10.5, 5.5)):
    assert abs(got - want) < 1e-12, (got, want)
assert cuoco.exact_pair_areas([3, 4], [0, 0], [3, 0]) == [0, 16, 9]
");
}

#[test]
fn invalid_sides_raise_value_error() {
    run(c"
try:
    cuoco.Triangle.from_sides(1, 2, 5)
except ValueError as e:
    assert 'inequality' in str(e)
else:
    raise AssertionError('accepted 1, 2, 5')
try:
    cuoco.third_side(1, 1, 4.0)
except ValueError:
    pass
else:
    raise AssertionError('accepted gamma > pi')
");
}

#[test]
fn solver_and_circles() {
    run(c"
assert cuoco.solve(4, 9, 16) == (-1.5, 5.5, 10.5)
assert not cuoco.all_positive(4, 9, 16)
inc = cuoco.incircle(cuoco.Triangle.from_sides(3, 4, 5))
assert [round(x, 12) for x in inc['tangent_lengths']] == [3, 2, 1]
c = cuoco.circumcircle(cuoco.Triangle.from_sides(1, 1, 1))
for nxt, prv in c['splits']:
    assert abs(nxt - math.pi / 6) < 1e-12 and abs(prv - math.pi / 6) < 1e-12
r = cuoco.interpret(cuoco.Triangle.from_sides(2, 3, 4), 'angles')
assert r['pass'] and not r['all_positive']
");
}

#[test]
fn figure_and_checks() {
    run(c"
t = cuoco.Triangle((0, 0), (4, 0), (1, 3))
svg = cuoco.render_figure(t, 'cuoco', labels=False, precision=4)
assert svg.startswith('<svg') or svg.startswith('<?xml')
assert '<text' not in svg
try:
    cuoco.render_figure(t, 'nope')
except ValueError:
    pass
else:
    raise AssertionError('accepted unknown kind')
assert all(ok for _, _, ok in cuoco.check(t))
s = cuoco.fuzz(200, seed=3)
assert s['pass'] and s['count'] == 200
");
}
