"""hecke 명령행 실행 스크립트 (python main.py <command> ...)"""
import sys

from src.app.main import main

if __name__ == "__main__":
    sys.exit(main())
