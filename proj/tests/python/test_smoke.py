import pytest

import seal

PAYLOAD = seal.TRUST_ESCALATION_PAYLOAD


@pytest.fixture
def store():
    return seal.seed_default()


def test_privilege_report(store):
    rows = store.list_user_privileges()
    assert [seal.render_row(r) for r in rows] == [
        "('User1', 'View Grades')",
        "('User2', 'Enter Grades')",
    ]


def test_seed_round_trip(store):
    assert seal.load_seed(seal.save_seed(store)).digest() == store.digest()
    with pytest.raises(seal.StoreError):
        seal.load_seed("user User3 student T9\n")


def test_tokenize_and_split():
    tokens = seal.tokenize("SELECT 1; SELECT 2")
    assert tokens[0].kind == seal.TokenKind.Keyword
    assert len(seal.split_statements(tokens)) == 2
    with pytest.raises(seal.SqlError):
        seal.tokenize("SELECT 'open")


def test_classify():
    assert seal.classify("User1") == seal.ThreatClass.Benign
    assert seal.classify(PAYLOAD) == seal.ThreatClass.UpdateBased
    assert seal.classify("' OR 1=1 --") == seal.ThreatClass.ErrorBased


def test_seal_mode_blocks_escalation(store):
    before = store.digest()
    step = seal.handle(PAYLOAD, store)
    assert step.threat == seal.ThreatClass.UpdateBased
    assert step.response.kind == seal.ResponseKind.NotFound
    assert step.response.message == "User doesn't exist"
    assert store.digest() == before


def test_benign_cases(store):
    assert seal.handle("User1", store).response.message == (
        "User1 doesn't have faculty authorization privileges"
    )
    assert seal.handle("User2", store).response.kind == seal.ResponseKind.Granted


def test_vulnerable_mode_escalates(store):
    response, report = seal.has_entergrades_vulnerable(store, PAYLOAD)
    assert response.kind == seal.ResponseKind.NotFound
    assert (report.statements_executed, report.mutations_applied) == (3, 1)
    assert [seal.render_row(r) for r in store.list_user_privileges()] == [
        "('User1', 'Enter Grades')",
        "('User2', 'Enter Grades')",
    ]


def test_parameterized_query_keeps_payload_inert(store):
    rows = seal.execute_parameterized(
        store, "SELECT Trust FROM users WHERE username = ?", [PAYLOAD]
    )
    assert rows == []
    with pytest.raises(seal.SqlError):
        seal.execute_parameterized(store, "SELECT 1; SELECT 1", [])


def test_strategies(store):
    factory = seal.make_factory(seal.ThreatClass.ErrorBased)
    assert factory.tag == seal.ThreatClass.ErrorBased
    response = seal.delegate_strategy(factory, "';--", store)
    assert response.message == "Something went wrong"


def test_lateral_scenario():
    scenario = (
        'step "' + PAYLOAD.replace('"', '\\"') + '" expect notfound\n'
        'step "\' junk" expect obscured\n'
    )
    passed, steps = seal.run_lateral(scenario, seal.seed_default(), seal.Mode.Seal)
    assert passed and all(ok for _, ok in steps)

    vulnerable = seal.seed_default()
    passed, _ = seal.run_lateral(scenario, vulnerable, seal.Mode.Vulnerable)
    assert not passed
    assert vulnerable.digest() != seal.seed_default().digest()
