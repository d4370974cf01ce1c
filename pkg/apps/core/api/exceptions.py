"""基础业务异常定义，便于 API 与命令行统一拦截并格式化输出。"""


class APIException(Exception):
    """通用异常，携带 HTTP 状态码、错误码与命令行退出码。"""

    status_code = 400
    code = "error"
    message = "操作失败"
    exit_code = 1

    def __init__(
        self,
        message: str | None = None,
        status_code: int | None = None,
        code: str | None = None,
        data=None,
        exit_code: int | None = None,
    ):
        msg = message or self.message
        super().__init__(msg)
        self.message = msg
        self.status_code = status_code or self.status_code
        self.code = code or self.code
        self.exit_code = exit_code or self.exit_code
        self.data = data

    def to_dict(self):
        payload = {
            "success": False,
            "message": self.message,
            "code": self.code,
        }
        if self.data is not None:
            payload["data"] = self.data
        return payload


class ValidationException(APIException):
    status_code = 400
    code = "validation_error"
    message = "参数校验失败"
    exit_code = 2


class PolicyException(APIException):
    status_code = 409
    code = "policy_violation"
    message = "输入违反严格模式策略"
    exit_code = 3


class TwinsFoundException(PolicyException):
    """目标图含孪生节点；data 为孪生划分（0 起始节点编号）。"""

    code = "twins_found"
    message = "目标图存在孪生节点"


class BusinessException(APIException):
    """计算过程中断言的不变量被破坏（实现缺陷，而非输入错误）。"""

    status_code = 500
    code = "business_error"
    message = "不变量校验失败"
    exit_code = 1


__all__ = [
    "APIException",
    "ValidationException",
    "PolicyException",
    "TwinsFoundException",
    "BusinessException",
]
