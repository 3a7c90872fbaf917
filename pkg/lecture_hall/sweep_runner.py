"""
일괄 검증 실행 관리
검증 사례들을 작업 스레드에 나눠 실행하고, 결과는 사례 순서대로 내보냅니다.
"""

import asyncio
import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from models.errors import LectureHallError
from models.report import CaseResult
from models.settings import get_settings

logger = logging.getLogger(__name__)

# (검증 이름, 매개변수 쌍, 실행 함수). 실행 함수는 (통과 여부, 반례 설명)을 반환
Case = Tuple[str, Tuple[Tuple[str, str], ...], Callable[[], Tuple[bool, Optional[str]]]]


class SweepManager:
    """검증 사례 실행 관리자"""

    def __init__(self, threads: Optional[int] = None):
        self.threads = threads or get_settings().threads
        self.results: List[CaseResult] = []
        self._pending: Dict[int, CaseResult] = {}
        self._next_index = 0

    def _execute(self, case: Case) -> CaseResult:
        """사례 하나 실행 (작업 스레드에서 호출)"""
        identity, params, check = case
        try:
            ok, witness = check()
        except LectureHallError as e:
            ok, witness = False, f"{type(e).__name__}: {e}"
        return CaseResult(identity=identity, params=params, ok=ok, witness=witness)

    def _emit_ready(self, on_result: Optional[Callable[[CaseResult], None]]) -> None:
        """앞선 사례가 모두 끝난 결과만 순서대로 내보냄"""
        while self._next_index in self._pending:
            result = self._pending.pop(self._next_index)
            self.results.append(result)
            if result.ok:
                logger.info("통과: %s", result.describe())
            else:
                logger.warning("실패: %s", result.describe())
            if on_result is not None:
                on_result(result)
            self._next_index += 1

    async def run(self, cases: Sequence[Case], on_result: Optional[Callable[[CaseResult], None]] = None) -> List[CaseResult]:
        """모든 사례를 실행하고 사례 순서의 결과 목록을 반환"""
        self.results, self._pending, self._next_index = [], {}, 0
        semaphore = asyncio.Semaphore(self.threads)

        async def _one(index: int, case: Case) -> None:
            async with semaphore:
                result = await asyncio.to_thread(self._execute, case)
            self._pending[index] = result
            self._emit_ready(on_result)

        await asyncio.gather(*(_one(index, case) for index, case in enumerate(cases)))
        logger.info("사례 %d개 완료 (스레드 %d개)", len(self.results), self.threads)
        return self.results

    def run_sync(self, cases: Sequence[Case], on_result: Optional[Callable[[CaseResult], None]] = None) -> List[CaseResult]:
        return asyncio.run(self.run(cases, on_result))

    @property
    def failures(self) -> List[CaseResult]:
        return [result for result in self.results if not result.ok]
