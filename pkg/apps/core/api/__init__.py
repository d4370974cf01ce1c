"""API 公共组件：异常与响应外壳。"""
