"""
애플리케이션 진입점
강의실 타블로 CLI를 실행합니다.

사용법:
    python app.py count --outer 2,1 --n 2 --m 1
    또는
    cd lecture_hall && python main.py count --outer 2,1 --n 2
"""

import os
import sys

# lecture_hall 디렉토리를 Python 경로에 추가
package_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), "lecture_hall")
sys.path.insert(0, package_path)

if __name__ == "__main__":
    from main import run

    run()
