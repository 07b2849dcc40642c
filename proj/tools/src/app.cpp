// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file app.cpp
//---------------------------------------------------------------------------//
#include "antibunch/cli/app.hpp"

#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "antibunch/cli/commands.hpp"
#include "antibunch/cli/io.hpp"

namespace antibunch::cli
{
//---------------------------------------------------------------------------//
int run_app(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Two-particle interference of thermal bosons and fermions"};
    app.require_subcommand(1);

    std::string out_dir = default_out_dir().string();
    unsigned workers = 0;
    app.add_option("--out", out_dir, "output directory (env ANTIBUNCH_OUT_DIR)");
    app.add_option("--workers", workers, "worker threads (0: all cores)");

    struct Sub
    {
        CLI::App* app{nullptr};
        std::string config_file;
        std::vector<std::string> sets;
        KeyValues flags;
    };
    std::map<std::string, Sub> subs;
    std::map<std::string, std::string> const about{
        {"analytic", "closed-form g2 curves"},
        {"mc", "Monte Carlo g2 curves from random-phase amplitudes"},
        {"events", "simulated detector events and coincidence histogram"},
        {"fit", "least-squares fit of a curve model to a CSV curve"},
        {"reproduce", "regenerate a figure: fig3, fig4, fig5 or fig6"},
    };
    for (auto const& name : command_names())
    {
        auto& s = subs[name];
        s.app = app.add_subcommand(name, about.at(name));
        s.app->add_option("--config", s.config_file, "key=value config file");
        s.app->add_option("--set", s.sets, "override KEY=VALUE (repeatable)");
        s.app->add_option("--out", out_dir, "output directory");
        s.app->add_option("--workers", workers, "worker threads");
        for (auto const& k : command_keys(name))
        {
            std::string help = k.help;
            if (!k.default_value.empty())
            {
                help += " [" + k.default_value + "]";
            }
            auto key = k.key;
            auto* flags = &s.flags;
            s.app->add_option_function<std::string>(
                "--" + key, [flags, key](std::string const& v) { (*flags)[key] = v; },
                help);
        }
    }
    subs["reproduce"].app->add_option_function<std::string>(
        "figure_pos",
        [&](std::string const& v) { subs["reproduce"].flags["figure"] = v; },
        "fig3, fig4, fig5 or fig6");

    std::string meta_file;
    auto* rerun = app.add_subcommand("rerun", "re-run a command from its JSON metadata");
    rerun->add_option("metadata", meta_file, "metadata file written by a previous run")
        ->required();
    rerun->add_option("--out", out_dir, "output directory");
    rerun->add_option("--workers", workers, "worker threads");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    RunContext ctx;
    ctx.out_dir = out_dir;
    ctx.workers = workers;
    ctx.out = &out;
    ctx.err = &err;
    try
    {
        if (rerun->parsed())
        {
            auto [command, kv] = load_metadata(meta_file);
            run_command(command, kv, ctx);
            return exit_ok;
        }
        for (auto& [name, s] : subs)
        {
            if (!s.app->parsed())
            {
                continue;
            }
            KeyValues kv;
            if (!s.config_file.empty())
            {
                kv = parse_key_values(read_file(s.config_file));
            }
            for (auto const& set : s.sets)
            {
                auto eq = set.find('=');
                if (eq == std::string::npos || eq == 0)
                {
                    throw ConfigError("--set expects KEY=VALUE, got '" + set + "'");
                }
                kv[set.substr(0, eq)] = set.substr(eq + 1);
            }
            for (auto const& [k, v] : s.flags)
            {
                kv[k] = v;
            }
            run_command(name, kv, ctx);
        }
        return exit_ok;
    }
    catch (ConfigError const& e)
    {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (NotConvergedError const& e)
    {
        err << "fit error: " << e.what() << '\n';
        return exit_not_converged;
    }
    catch (std::exception const& e)
    {
        err << "numerical error: " << e.what() << '\n';
        return exit_numerical;
    }
}

//---------------------------------------------------------------------------//
}  // namespace antibunch::cli
