// Copyright 2026 The IDIA Toolkit Authors.
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

#ifndef IDIA_TESTS_TESTING_TEST_SERVER_H_
#define IDIA_TESTS_TESTING_TEST_SERVER_H_

#include <string>
#include <thread>
#include <utility>

#include <fmt/format.h>
#include <httplib.h>

#include "idia/target/remote_backend.h"

namespace idia::testing {

// Serves /v1/predict with a caller-supplied handler on an ephemeral port.
class TestServer {
 public:
  explicit TestServer(httplib::Server::Handler predict) {
    server_.Post(target::kPredictPath, std::move(predict));
    server_.Get(target::kHealthPath,
                [](const httplib::Request&, httplib::Response& res) {
                  res.set_content("ok\n", "text/plain");
                });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~TestServer() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return fmt::format("http://127.0.0.1:{}", port_); }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace idia::testing

#endif  // IDIA_TESTS_TESTING_TEST_SERVER_H_
