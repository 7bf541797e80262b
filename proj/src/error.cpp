// Copyright 2026 The gqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gqc/error.hpp"

namespace gqc {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument:
            return "invalid-argument";
        case ErrorCode::kDomain:
            return "domain";
        case ErrorCode::kUnsupportedDimension:
            return "unsupported-dimension";
        case ErrorCode::kDegenerateElement:
            return "degenerate-element";
        case ErrorCode::kValidation:
            return "validation";
        case ErrorCode::kUnreachable:
            return "unreachable";
        case ErrorCode::kResourceCap:
            return "resource-cap";
        case ErrorCode::kParse:
            return "parse";
        case ErrorCode::kCompile:
            return "compile";
        case ErrorCode::kCertification:
            return "certification";
        case ErrorCode::kIo:
            return "io";
        case ErrorCode::kInternal:
            return "internal";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace gqc
