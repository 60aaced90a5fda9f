import pytest

from hypergirth import (
    FormatError,
    PreconditionError,
    ResourceBudgetError,
    VerificationError,
    certificate,
    parse_certificate,
    reverify_certificate,
)


@pytest.fixture(scope="module")
def hex_cert():
    return certificate(6, 5, 2, 2, 3)


@pytest.fixture(scope="module")
def oct_cert():
    return certificate(8, None, 5, 2, 3)


class TestHexagonCertificate:
    def test_valid(self, hex_cert):
        assert hex_cert.valid
        names = [c.name for c in hex_cert.checks]
        assert names == [
            "p-prime",
            "seed-size",
            "r-range",
            "order-closed-form-1",
            "order-closed-form-2",
            "copy-count-2",
            "vertex-growth-1",
            "vertex-growth-2",
            "edge-bound",
            "split-factor",
        ]

    def test_values(self, hex_cert):
        vals = dict(hex_cert.values)
        assert vals["order_1"] == "5^2"
        assert vals["order_2"] == "5^19"
        assert vals["edge_bound"] == "5^231"
        assert vals["v_1"] == str((1 + 25) * (1 + 25**4 + 25**8))
        # exact recurrence: edges = (p-1) * b(q1) * b(q2), final = split * edges
        assert int(vals["edges"]) == 4 * int(vals["b_1"]) * int(vals["b_2"])
        assert int(vals["split_factor"]) == (1 + 5**2) // 3 == 8
        assert int(vals["final_edges"]) == 8 * int(vals["edges"])
        assert vals["vertices"] == vals["v_2"]

    def test_edge_bound_is_real_bignum_comparison(self, hex_cert):
        vals = dict(hex_cert.values)
        assert int(vals["edges"]) ** 64 >= 5 ** (64 * 231)

    def test_methods(self, hex_cert):
        methods = {c.name: c.method for c in hex_cert.checks}
        assert methods["order-closed-form-1"] == "exponent-exact"
        assert methods["edge-bound"] == "bignum"

    def test_invalid_assumption(self):
        cert = certificate(6, 5, 1, 1, 3)
        assert not cert.valid
        failed = [c.name for c in cert.checks if not c.passed]
        assert failed == ["seed-size"]

    def test_invalid_r(self):
        cert = certificate(6, 5, 2, 1, 100)
        assert not cert.valid
        assert [c.name for c in cert.checks if not c.passed] == ["r-range"]

    def test_nonprime_p(self):
        cert = certificate(6, 6, 2, 1, 3)
        assert not cert.valid
        assert not cert.checks[0].passed

    def test_malformed_arguments_raise(self):
        with pytest.raises(PreconditionError):
            certificate(6, 5, 2, 0, 3)
        with pytest.raises(PreconditionError):
            certificate(7, 5, 2, 1, 3)
        with pytest.raises(PreconditionError):
            certificate(6, None, 2, 1, 3)


class TestOctagonCertificate:
    def test_valid(self, oct_cert):
        assert oct_cert.valid
        vals = dict(oct_cert.values)
        assert vals["order_1"] == "2^5"
        assert vals["order_2"] == "2^51"
        assert vals["edge_bound"] == "2^616"
        assert int(vals["edges"]) == int(vals["b_1"]) * int(vals["b_2"])
        assert int(vals["edges"]) ** 72 >= 2 ** (72 * 616)

    def test_even_m_invalid(self):
        cert = certificate(8, None, 6, 1, 3)
        assert not cert.valid
        assert [c.name for c in cert.checks if not c.passed] == ["m-odd"]

    def test_small_m_invalid(self):
        cert = certificate(8, 2, 3, 1, 3)
        assert not cert.valid
        assert [c.name for c in cert.checks if not c.passed] == ["m-size"]

    def test_p_must_be_two(self):
        with pytest.raises(PreconditionError, match="base 2"):
            certificate(8, 3, 5, 1, 3)


class TestSerialization:
    def test_roundtrip(self, hex_cert):
        text = hex_cert.serialize()
        assert text.startswith("cert 1\ngirth 6\np 5\nm 2\nn 2\nr 3\nstatus VALID\n")
        parsed = parse_certificate(text)
        assert parsed.valid
        assert dict(parsed.values)["edge_bound"] == "5^231"

    def test_reverify_ok(self, hex_cert, oct_cert):
        assert reverify_certificate(hex_cert.serialize()).valid
        assert reverify_certificate(oct_cert.serialize()).valid

    def test_reverify_detects_value_tamper(self, hex_cert):
        bad = hex_cert.serialize().replace("5^231", "5^230")
        with pytest.raises(VerificationError, match="does not re-verify"):
            reverify_certificate(bad)

    def test_reverify_detects_status_tamper(self):
        cert = certificate(6, 5, 1, 1, 3)
        bad = cert.serialize().replace("status INVALID", "status VALID").replace(
            "check seed-size FAIL", "check seed-size PASS"
        )
        with pytest.raises(VerificationError):
            reverify_certificate(bad)

    def test_parse_rejects_inconsistent_status(self, hex_cert):
        bad = hex_cert.serialize().replace("status VALID", "status INVALID")
        with pytest.raises(FormatError, match="status does not match"):
            parse_certificate(bad)

    def test_parse_rejects_garbage(self):
        with pytest.raises(FormatError):
            parse_certificate("cert 2\n")
        with pytest.raises(FormatError):
            parse_certificate("cert 1\ngirth 6\np 5\nm 2\nn 2\nr 3\nstatus VALID\njunk\n")

    def test_reverify_invalid_cert_roundtrips(self):
        cert = certificate(6, 5, 1, 1, 3)
        assert not reverify_certificate(cert.serialize()).valid


class TestDigitBudget:
    def test_budget_names_check(self):
        with pytest.raises(ResourceBudgetError, match="vertex-growth-2"):
            certificate(6, 5, 2, 2, 3, digit_budget=50)

    def test_large_n_exceeds_default_budget(self):
        with pytest.raises(ResourceBudgetError):
            certificate(6, 5, 2, 6, 3)

    def test_budget_is_not_a_validity_question(self):
        # same parameters pass with the default budget
        assert certificate(6, 5, 2, 2, 3).valid
