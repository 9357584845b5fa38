"""포트: 유스케이스가 의존하는 추상 그래프 소스."""
