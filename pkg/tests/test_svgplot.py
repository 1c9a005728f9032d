import numpy as np

from photonloc.svgplot import line_plot


def test_svg_is_deterministic_and_well_formed(tmp_path):
    x = np.linspace(-8.0, 8.0, 200)
    curves = [("|psi|", np.exp(-x ** 2)), ("energy", 0.5 * np.exp(-0.5 * x ** 2))]
    p1, p2 = tmp_path / "a.svg", tmp_path / "b.svg"
    line_plot(p1, x, curves, title="panel a", xlabel="x", ylabel="value")
    line_plot(p2, x, curves, title="panel a", xlabel="x", ylabel="value")
    body = p1.read_text()
    assert p1.read_bytes() == p2.read_bytes()
    assert body.startswith("<svg")
    assert body.rstrip().endswith("</svg>")
    assert "panel a" in body
    assert "|psi|" in body
    assert "NaN" not in body and "nan" not in body


def test_svg_log_scale_clips_tiny_and_nonpositive(tmp_path):
    x = np.linspace(-8.0, 8.0, 400)
    y = np.exp(-x ** 2)
    y[::7] = 0.0
    y[::11] = 1e-40
    path = tmp_path / "log.svg"
    line_plot(path, x, [("u", y)], log_y=True)
    body = path.read_text()
    assert "NaN" not in body and "nan" not in body and "inf" not in body
    assert "1e-" in body  # log ticks


def test_svg_escapes_markup(tmp_path):
    x = np.linspace(0.0, 1.0, 16)
    path = tmp_path / "esc.svg"
    line_plot(path, x, [("a<b&c>", x)], title="t<&>")
    body = path.read_text()
    assert "a<b" not in body
    assert "a&lt;b&amp;c&gt;" in body


def test_svg_constant_curve_does_not_degenerate(tmp_path):
    x = np.linspace(0.0, 1.0, 16)
    path = tmp_path / "const.svg"
    line_plot(path, x, [("c", np.full(16, 2.5))])
    body = path.read_text()
    assert "polyline" in body
