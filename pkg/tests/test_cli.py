"""The command-line surface: outputs, determinism, exit codes."""

import json

from simphom.cli import run


def out_of(argv):
    lines, status = run(argv)
    return "\n".join(lines), status


def test_homology_machine_format():
    text, status = out_of(["homology", "--space", "rp2", "--dim", "2",
                           "--format", "machine"])
    assert status == 0
    assert "H_0=Z" in text and "H_1=Z/2" in text and "H_2=0" in text


def test_euler_boundary3():
    text, status = out_of(["euler", "--space", "boundary:3"])
    assert status == 0
    assert "chi = 2" in text


def test_kan_interval_fails_with_witness():
    text, status = out_of(["kan", "--space", "delta:1", "--dim", "2"])
    assert status == 1
    assert "FAIL" in text
    assert "(2,0)" in text and "s0 0" in text


def test_kan_discrete_passes():
    text, status = out_of(["kan", "--space", "discrete:2", "--dim", "3"])
    assert status == 0
    assert "PASS" in text


def test_reports_are_byte_identical():
    argv = ["les", "--space", "delta:2", "--sub", "skeleton:1"]
    first = out_of(argv)
    second = out_of(argv)
    assert first == second
    argv = ["cover", "--space", "rp2", "--group", "cyclic:2"]
    assert out_of(argv) == out_of(argv)


def test_les_and_mv_commands():
    text, status = out_of(["les", "--space", "delta:3", "--sub", "skeleton:2"])
    assert status == 0 and "RESULT PASS" in text
    text, status = out_of(["mv", "--space", "boundary:2",
                           "--a", "gens:1.0,1.1", "--b", "gens:1.2"])
    assert status == 0 and "H_1(K) = Z" in text


def test_cover_command():
    text, status = out_of(["cover", "--space", "circle", "--group", "cyclic:2"])
    assert status == 0
    assert "cover counts (2, 2)" in text


def test_cover_with_explicit_images():
    text, status = out_of(["cover", "--space", "circle", "--group", "cyclic:2",
                           "--images", "e0=g"])
    assert status == 0


def test_cup_kunneth_uct_coeffs():
    text, status = out_of(["cup", "--space", "rp2", "--coeff", "Z/2"])
    assert status == 0 and "H^1 = Z/2" in text
    text, status = out_of(["kunneth", "--space", "circle", "--with", "circle"])
    assert status == 0 and "RESULT PASS" in text
    text, status = out_of(["uct", "--space", "klein", "--coeff", "Z/4"])
    assert status == 0
    text, status = out_of(["coeffs", "--space", "rp2", "--coeff", "Z/2"])
    assert status == 0 and "H_2 = Z/2" in text
    text, status = out_of(["cohomology", "--space", "rp2", "--coeff", "Z"])
    assert status == 0 and "H^2 = Z/2" in text


def test_fill_command():
    faces = json.dumps([[[0, 0], [0]], [[1, 0], []]])
    text, status = out_of(["fill", "--space", "delta:1", "--dim", "2",
                           "--k", "0", "--faces", faces])
    assert status == 0
    assert "fillers 0" in text


def test_pi1_and_validate_and_subdivide():
    text, status = out_of(["pi1", "--space", "torus"])
    assert status == 0 and "abelianization Z^2" in text
    text, status = out_of(["validate", "--space", "klein"])
    assert status == 0 and "PASS" in text
    text, status = out_of(["subdivide", "--space", "delta:2"])
    assert status == 0 and "(7, 12, 6)" in text


def test_catalog_list_and_print(tmp_path):
    text, status = out_of(["catalog-list"])
    assert status == 0 and "circle" in text
    text, status = out_of(["print", "--space", "circle"])
    assert status == 0 and "sset v1" in text
    # documents written to disk load through --file
    doc = tmp_path / "c.sset"
    doc.write_text(text.split("simphom print\n")[-1] + "\n")
    text2, status = out_of(["homology", "--file", str(doc)])
    assert status == 0 and "H_1 = Z" in text2


def test_error_paths():
    text, status = out_of(["homology", "--space", "nowhere"])
    assert status == 2 and "error" in text
    text, status = out_of(["les", "--space", "delta:2"])
    assert status == 2
    text, status = out_of(["cup", "--space", "torus", "--coeff", "Z^2"])
    assert status == 2
    text, status = out_of(["fill", "--space", "delta:1"])
    assert status == 2


def test_seed_flag_is_accepted():
    first = out_of(["homology", "--space", "circle", "--seed", "7"])
    second = out_of(["homology", "--space", "circle", "--seed", "8"])
    assert first == second
