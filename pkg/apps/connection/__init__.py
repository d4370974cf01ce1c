"""连接矩阵 N、A、M 的有限截断与精确秩。"""
