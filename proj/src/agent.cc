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


#include "stabench/agent.h"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netdb.h>
#include <netinet/in.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <deque>
#include <iostream>
#include <mutex>
#include <thread>

#include "stabench/synth.h"

namespace stabench {

namespace {

using Clock = CancelToken::Clock;

void ignore_sigpipe() {
    static std::once_flag once;
    std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

void write_all(int fd, std::string_view data, bool socket) {
    while (!data.empty()) {
        ssize_t w = socket ? ::send(fd, data.data(), data.size(), MSG_NOSIGNAL) : ::write(fd, data.data(), data.size());
        if (w < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw TransportError(std::string("agent write failed: ") + std::strerror(errno));
        }
        data.remove_prefix((size_t)w);
    }
}

class LineReader {
   public:
    explicit LineReader(int fd) : fd_(fd) {
    }

    /// nullopt on timeout; throws TransportError at end of stream.
    std::optional<std::string> read_line(std::optional<Clock::time_point> deadline) {
        while (true) {
            size_t nl = buf_.find('\n');
            if (nl != std::string::npos) {
                std::string line = buf_.substr(0, nl);
                buf_.erase(0, nl + 1);
                return line;
            }
            int wait_ms = -1;
            if (deadline) {
                auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*deadline - Clock::now()).count();
                if (left <= 0) {
                    return std::nullopt;
                }
                wait_ms = (int)std::min<int64_t>(left, 1 << 30);
            }
            pollfd p{fd_, POLLIN, 0};
            int r = ::poll(&p, 1, wait_ms);
            if (r < 0) {
                if (errno == EINTR) {
                    continue;
                }
                throw TransportError(std::string("poll failed: ") + std::strerror(errno));
            }
            if (r == 0) {
                continue;
            }
            char chunk[4096];
            ssize_t got = ::read(fd_, chunk, sizeof chunk);
            if (got < 0) {
                if (errno == EINTR || errno == EAGAIN) {
                    continue;
                }
                throw TransportError(std::string("agent read failed: ") + std::strerror(errno));
            }
            if (got == 0) {
                throw TransportError("agent closed the connection");
            }
            buf_.append(chunk, (size_t)got);
        }
    }

   private:
    int fd_;
    std::string buf_;
};

Json parse_message(const std::string &line) {
    try {
        Json j = Json::parse(line);
        if (!j.is_object() || !j.contains("type")) {
            throw TransportError("agent message without a type: " + line.substr(0, 200));
        }
        return j;
    } catch (const Json::parse_error &e) {
        throw TransportError("agent sent malformed JSON: " + line.substr(0, 200));
    }
}

class InProcessConnection : public AgentConnection {
   public:
    explicit InProcessConnection(std::unique_ptr<AgentLogic> logic) : logic_(std::move(logic)) {
    }
    void send(const Json &message) override {
        for (auto &reply : logic_->on_message(message)) {
            pending_.push_back(std::move(reply));
        }
    }
    std::optional<Json> receive(std::optional<Clock::time_point> deadline) override {
        if (deadline && Clock::now() >= *deadline) {
            return std::nullopt;
        }
        if (pending_.empty()) {
            throw TransportError("in-process agent produced no reply");
        }
        Json j = std::move(pending_.front());
        pending_.pop_front();
        return j;
    }

   private:
    std::unique_ptr<AgentLogic> logic_;
    std::deque<Json> pending_;
};

class ExecConnection : public AgentConnection {
   public:
    explicit ExecConnection(const std::string &command) : reader_(-1) {
        ignore_sigpipe();
        int in[2], out[2];
        if (::pipe2(in, O_CLOEXEC) != 0) {
            throw TransportError("pipe failed");
        }
        if (::pipe2(out, O_CLOEXEC) != 0) {
            ::close(in[0]);
            ::close(in[1]);
            throw TransportError("pipe failed");
        }
        pid_ = ::fork();
        if (pid_ < 0) {
            for (int fd : {in[0], in[1], out[0], out[1]}) {
                ::close(fd);
            }
            throw TransportError("fork failed");
        }
        if (pid_ == 0) {
            ::dup2(in[0], 0);
            ::dup2(out[1], 1);
            ::execl("/bin/sh", "sh", "-c", command.c_str(), (char *)nullptr);
            ::_exit(127);
        }
        ::close(in[0]);
        ::close(out[1]);
        to_child_ = in[1];
        from_child_ = out[0];
        reader_ = LineReader(from_child_);
    }

    ~ExecConnection() override {
        if (to_child_ >= 0) {
            ::close(to_child_);
        }
        for (int i = 0; i < 20; i++) {
            if (::waitpid(pid_, nullptr, WNOHANG) == pid_) {
                ::close(from_child_);
                return;
            }
            std::this_thread::sleep_for(std::chrono::milliseconds(10));
        }
        ::kill(pid_, SIGKILL);
        ::waitpid(pid_, nullptr, 0);
        ::close(from_child_);
    }

    void send(const Json &message) override {
        write_all(to_child_, message.dump() + "\n", false);
    }
    std::optional<Json> receive(std::optional<Clock::time_point> deadline) override {
        auto line = reader_.read_line(deadline);
        if (!line) {
            return std::nullopt;
        }
        return parse_message(*line);
    }

   private:
    pid_t pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    LineReader reader_;
};

int connect_tcp(const std::string &host, uint16_t port) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo *res = nullptr;
    if (::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &res) != 0) {
        throw TransportError("cannot resolve " + host);
    }
    int fd = -1;
    for (addrinfo *a = res; a != nullptr; a = a->ai_next) {
        fd = ::socket(a->ai_family, a->ai_socktype | SOCK_CLOEXEC, a->ai_protocol);
        if (fd < 0) {
            continue;
        }
        if (::connect(fd, a->ai_addr, a->ai_addrlen) == 0) {
            break;
        }
        ::close(fd);
        fd = -1;
    }
    ::freeaddrinfo(res);
    if (fd < 0) {
        throw TransportError("cannot connect to " + host + ":" + std::to_string(port));
    }
    return fd;
}

class TcpConnection : public AgentConnection {
   public:
    TcpConnection(const std::string &host, uint16_t port) : fd_(connect_tcp(host, port)), reader_(fd_) {
    }
    ~TcpConnection() override {
        ::close(fd_);
    }
    void send(const Json &message) override {
        write_all(fd_, message.dump() + "\n", true);
    }
    std::optional<Json> receive(std::optional<Clock::time_point> deadline) override {
        auto line = reader_.read_line(deadline);
        if (!line) {
            return std::nullopt;
        }
        return parse_message(*line);
    }

   private:
    int fd_;
    LineReader reader_;
};

class BuiltinAgent : public AgentLogic {
   public:
    explicit BuiltinAgent(bool reference) : reference_(reference) {
    }

    std::vector<Json> on_message(const Json &message) override {
        std::string type = message.value("type", std::string());
        if (type == "task") {
            if (!reference_) {
                return {{{"type", "submit"}, {"circuit", ""}}};
            }
            try {
                const Json &in = message.at("inputs");
                Json code = {{"generators", in.at("generators")}, {"num_qubits", in.at("num_qubits")}};
                Circuit c = synthesize_prep(code_from_json(code));
                return {{{"type", "submit"}, {"circuit", c.str()}}};
            } catch (const std::exception &) {
                return {{{"type", "give_up"}}};
            }
        }
        if (type == "feedback") {
            return {{{"type", "give_up"}}};
        }
        return {};
    }

   private:
    bool reference_;
};

}  // namespace

std::unique_ptr<AgentLogic> make_builtin_agent(std::string_view name) {
    if (name == "reference") {
        return std::make_unique<BuiltinAgent>(true);
    }
    if (name == "null") {
        return std::make_unique<BuiltinAgent>(false);
    }
    throw std::invalid_argument("unknown built-in agent '" + std::string(name) + "'");
}

std::unique_ptr<AgentConnection> make_in_process_connection(std::unique_ptr<AgentLogic> logic) {
    return std::make_unique<InProcessConnection>(std::move(logic));
}

std::unique_ptr<AgentConnection> make_exec_connection(const std::string &command) {
    return std::make_unique<ExecConnection>(command);
}

std::unique_ptr<AgentConnection> make_tcp_connection(const std::string &host, uint16_t port) {
    return std::make_unique<TcpConnection>(host, port);
}

AgentFactory make_agent_factory(const std::string &descriptor) {
    if (descriptor == "reference" || descriptor == "null") {
        make_builtin_agent(descriptor);
        return [descriptor]() { return make_in_process_connection(make_builtin_agent(descriptor)); };
    }
    if (descriptor.rfind("exec:", 0) == 0) {
        std::string command = descriptor.substr(5);
        if (command.empty()) {
            throw std::invalid_argument("exec agent needs a command");
        }
        return [command]() { return make_exec_connection(command); };
    }
    if (descriptor.rfind("tcp:", 0) == 0) {
        std::string rest = descriptor.substr(4);
        size_t colon = rest.rfind(':');
        if (colon == std::string::npos || colon == 0) {
            throw std::invalid_argument("tcp agent descriptor must be tcp:HOST:PORT");
        }
        std::string host = rest.substr(0, colon);
        int port = 0;
        try {
            port = std::stoi(rest.substr(colon + 1));
        } catch (const std::exception &) {
            port = -1;
        }
        if (port <= 0 || port > 65535) {
            throw std::invalid_argument("bad port in '" + descriptor + "'");
        }
        return [host, port]() { return make_tcp_connection(host, (uint16_t)port); };
    }
    throw std::invalid_argument("unknown agent descriptor '" + descriptor + "'");
}

void serve_agent_stream(AgentLogic &logic, std::istream &in, std::ostream &out) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        Json message;
        try {
            message = Json::parse(line);
        } catch (const Json::parse_error &) {
            continue;
        }
        for (const auto &reply : logic.on_message(message)) {
            out << reply.dump() << "\n";
        }
        out.flush();
    }
}

void serve_agent_tcp(const std::string &host, uint16_t port, std::function<std::unique_ptr<AgentLogic>()> make_logic,
                     size_t max_connections, std::function<void(uint16_t)> on_listening) {
    ignore_sigpipe();
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo *res = nullptr;
    if (::getaddrinfo(host.c_str(), nullptr, &hints, &res) != 0 || res == nullptr) {
        throw TransportError("cannot resolve " + host);
    }
    sockaddr_in addr = *reinterpret_cast<sockaddr_in *>(res->ai_addr);
    ::freeaddrinfo(res);
    addr.sin_port = htons(port);

    int listener = ::socket(AF_INET, SOCK_STREAM | SOCK_CLOEXEC, 0);
    int one = 1;
    ::setsockopt(listener, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    if (::bind(listener, reinterpret_cast<sockaddr *>(&addr), sizeof addr) != 0 || ::listen(listener, 64) != 0) {
        ::close(listener);
        throw TransportError("cannot listen on " + host + ":" + std::to_string(port) + ": " + std::strerror(errno));
    }
    socklen_t len = sizeof addr;
    ::getsockname(listener, reinterpret_cast<sockaddr *>(&addr), &len);
    if (on_listening) {
        on_listening(ntohs(addr.sin_port));
    }

    std::vector<std::jthread> sessions;
    for (size_t served = 0; max_connections == 0 || served < max_connections; served++) {
        int fd = ::accept4(listener, nullptr, nullptr, SOCK_CLOEXEC);
        if (fd < 0) {
            if (errno == EINTR) {
                served--;
                continue;
            }
            break;
        }
        sessions.emplace_back([fd, logic = make_logic()]() {
            LineReader reader(fd);
            try {
                while (true) {
                    auto line = reader.read_line(std::nullopt);
                    Json message;
                    try {
                        message = Json::parse(*line);
                    } catch (const Json::parse_error &) {
                        continue;
                    }
                    for (const auto &reply : logic->on_message(message)) {
                        write_all(fd, reply.dump() + "\n", true);
                    }
                }
            } catch (const TransportError &) {
            }
            ::close(fd);
        });
    }
    ::close(listener);
}

}  // namespace stabench
