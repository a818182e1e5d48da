"""Smoke test for the python bindings; needs _bhverify on the path."""

import json

import bhverify


def main():
    verdict = json.loads(bhverify.verify("torus:2,3"))
    assert verdict["knot"] == "torus:2,3", verdict
    assert verdict["verdict"] == "true", verdict
    assert bhverify.recheck(json.dumps(verdict))

    tampered = dict(verdict)
    tampered["verdict"] = "false"
    assert not bhverify.recheck(json.dumps(tampered))

    pretzel = json.loads(bhverify.verify("pretzel:1"))
    assert pretzel["verdict"] == "true", pretzel

    composite = json.loads(bhverify.verify("connectsum:[torus:2,3,pretzel:1]"))
    assert composite["verdict"] == "true", composite
    assert composite["evidence"]["kind"] == "connect_sum"

    starved = json.loads(bhverify.verify("torus:2,3", json.dumps({"max_terms": 1})))
    assert starved["verdict"] == "indeterminate", starved

    try:
        bhverify.verify("torus:4,6")
    except ValueError as e:
        assert "gcd" in str(e), e
    else:
        raise AssertionError("gcd > 1 must be rejected")

    trefoil = json.loads(bhverify.daha_check("trefoil"))
    assert trefoil["pass"] is True, trefoil

    relations = json.loads(bhverify.daha_check("relations", 3))
    assert relations["pass"] is True, relations

    holds = json.loads(bhverify.apoly("l^2*m^6 - l*m^6 + l - 1"))
    assert holds["holds"] is True, holds
    assert holds["witness"] == "1", holds

    fails = json.loads(bhverify.apoly("l^3*m^24 - l^2*m^24 - l + 1"))
    assert fails["holds"] is False, fails

    assert bhverify.__version__
    print("python smoke ok")


if __name__ == "__main__":
    main()
