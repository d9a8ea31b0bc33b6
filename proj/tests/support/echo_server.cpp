// SPDX-License-Identifier: Apache-2.0
#include "echo_server.hpp"

#include <set>
#include <stdexcept>

#include "httplib.h"

namespace apibind::testing {

struct EchoServer::Impl {
  httplib::Server server;
  std::mutex mutex;
  std::vector<ObservedRequest> seen;
};

EchoServer::EchoServer() : impl_(std::make_unique<Impl>()) {
  // Connection metadata that httplib stores alongside the real headers.
  static const std::set<std::string> kPseudo{"REMOTE_ADDR", "REMOTE_PORT", "LOCAL_ADDR", "LOCAL_PORT"};
  auto record = [this](const httplib::Request& req, httplib::Response& res) {
    ObservedRequest o;
    o.method = req.method;
    o.target = req.target;
    for (const auto& [k, v] : req.headers) {
      if (!kPseudo.contains(k)) o.headers.emplace_back(k, v);
    }
    o.body = req.body;
    {
      std::lock_guard<std::mutex> lock(impl_->mutex);
      impl_->seen.push_back(std::move(o));
    }
    res.set_content("ok", "text/plain");
  };
  auto& s = impl_->server;
  s.Get(".*", record);
  s.Post(".*", record);
  s.Put(".*", record);
  s.Patch(".*", record);
  s.Delete(".*", record);
  s.Options(".*", record);
  port_ = s.bind_to_any_port("127.0.0.1");
  if (port_ <= 0) throw std::runtime_error("echo server could not bind");
  thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

EchoServer::~EchoServer() {
  impl_->server.stop();
  if (thread_.joinable()) thread_.join();
}

std::vector<ObservedRequest> EchoServer::take() {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return std::exchange(impl_->seen, {});
}

}  // namespace apibind::testing
