"""核心公共组件：异常、响应外壳、中间件与工具。"""
