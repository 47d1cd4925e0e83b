// Copyright 2026 The stabench Authors
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


#ifndef STABENCH_AGENT_H
#define STABENCH_AGENT_H

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stabench/cancel.h"
#include "stabench/json_io.h"

namespace stabench {

inline constexpr std::string_view kAgentProtocol = "stabench-agent/1";

class TransportError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// One agent dialogue: line-delimited JSON messages in both directions.
class AgentConnection {
   public:
    virtual ~AgentConnection() = default;
    virtual void send(const Json &message) = 0;
    /// Next message, or nullopt once the deadline passes.
    virtual std::optional<Json> receive(std::optional<CancelToken::Clock::time_point> deadline) = 0;
};

/// Agent behavior as a message handler returning zero or more replies.
class AgentLogic {
   public:
    virtual ~AgentLogic() = default;
    virtual std::vector<Json> on_message(const Json &message) = 0;
};

/// "reference" synthesizes with the built-in solver; "null" always submits an empty circuit.
std::unique_ptr<AgentLogic> make_builtin_agent(std::string_view name);

using AgentFactory = std::function<std::unique_ptr<AgentConnection>()>;

std::unique_ptr<AgentConnection> make_in_process_connection(std::unique_ptr<AgentLogic> logic);

/// Runs `sh -c command` and talks to it over its stdin and stdout.
std::unique_ptr<AgentConnection> make_exec_connection(const std::string &command);

std::unique_ptr<AgentConnection> make_tcp_connection(const std::string &host, uint16_t port);

/// Descriptor forms: "reference", "null", "exec:COMMAND", "tcp:HOST:PORT".
AgentFactory make_agent_factory(const std::string &descriptor);

/// Serves one dialogue over streams until end of input.
void serve_agent_stream(AgentLogic &logic, std::istream &in, std::ostream &out);

/// Accepts loopback connections and serves each with a fresh agent on its own thread.
///
/// `on_listening` receives the bound port (useful with port 0). Returns after
/// `max_connections` dialogues have finished, or never when it is 0.
void serve_agent_tcp(const std::string &host, uint16_t port, std::function<std::unique_ptr<AgentLogic>()> make_logic,
                     size_t max_connections, std::function<void(uint16_t)> on_listening = {});

}  // namespace stabench

#endif
