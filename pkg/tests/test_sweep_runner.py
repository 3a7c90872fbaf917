"""일괄 검증 실행 관리자 테스트"""

import threading
import time

from models.errors import IdentityError
from sweep_runner import SweepManager


def _case(index, ok=True, delay=0.0):
    def check():
        time.sleep(delay)
        return ok, None if ok else f"반례 {index}"
    return ("demo", (("i", str(index)),), check)


def test_results_follow_case_order():
    # 앞의 사례일수록 늦게 끝나도록
    cases = [_case(i, delay=0.01 * (5 - i)) for i in range(5)]
    seen = []
    results = SweepManager(threads=4).run_sync(cases, seen.append)
    assert [dict(r.params)["i"] for r in results] == ["0", "1", "2", "3", "4"]
    assert seen == results


def test_failures_are_collected():
    manager = SweepManager(threads=2)
    manager.run_sync([_case(0), _case(1, ok=False), _case(2)])
    assert [r.witness for r in manager.failures] == ["반례 1"]
    assert manager.failures[0].describe() == "demo i=1 FAIL (반례 1)"
    assert manager.results[0].describe() == "demo i=0 OK"


def test_library_errors_become_failures():
    def broken():
        raise IdentityError("중간 단계 불일치")

    manager = SweepManager(threads=1)
    results = manager.run_sync([("demo", (), broken)])
    assert not results[0].ok
    assert results[0].witness == "IdentityError: 중간 단계 불일치"


def test_thread_limit():
    active, peak = [0], [0]
    lock = threading.Lock()

    def check():
        with lock:
            active[0] += 1
            peak[0] = max(peak[0], active[0])
        time.sleep(0.02)
        with lock:
            active[0] -= 1
        return True, None

    SweepManager(threads=2).run_sync([("demo", (), check)] * 6)
    assert peak[0] <= 2


def test_threads_from_settings(monkeypatch):
    monkeypatch.setenv("LHK_THREADS", "3")
    assert SweepManager().threads == 3


def test_rerun_resets_state():
    manager = SweepManager(threads=2)
    manager.run_sync([_case(0, ok=False)])
    manager.run_sync([_case(0)])
    assert len(manager.results) == 1
    assert manager.failures == []
