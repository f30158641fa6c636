use crate::asm::{AsmInstr, Op};

use super::cfg::{BodyItem, Cfg};
use super::PrepError;

/// Fuses B1 into B2 whenever B1 ends in a direct jump to B2, that jump is
/// B1's only way out, and B2 has no other predecessor. Iterates to a
/// fixpoint. A B2 that ends in a call stays put unless it already follows
/// B1, since its return lands on the next block in layout order.
pub fn merge_blocks(mut cfg: Cfg) -> Cfg {
    loop {
        let preds = cfg.pred_counts();
        let edges = cfg.edges();
        let pick = (0..cfg.blocks.len()).find_map(|i| {
            let b1 = &cfg.blocks[i];
            let last = b1.last()?;
            if !last.is_jump() || b1.island.is_some() {
                return None;
            }
            let j = cfg.index_of(last.target()?)?;
            let only = edges.iter().filter(|e| e.src == i).all(|e| e.dst == j);
            let b2 = &cfg.blocks[j];
            let movable = j == i + 1 || !b2.ends_with_call();
            (j != i && j != 0 && preds[j] == 1 && only && movable).then_some((i, j))
        });
        let Some((i, j)) = pick else { return cfg };
        let b2 = cfg.blocks.remove(j);
        let i = if j < i { i - 1 } else { i };
        let b1 = &mut cfg.blocks[i];
        let jump = b1.body.iter().rposition(|x| matches!(x, BodyItem::Instr(_))).unwrap();
        b1.body.remove(jump);
        b1.body.extend(b2.labels().map(|l| BodyItem::Label(l.to_string())));
        b1.body.extend(b2.body);
        b1.fall = b2.fall;
        b1.island = b2.island;
    }
}

/// Makes every entry into a block a taken control-flow instruction by
/// appending `jal x0, next` to blocks that fall through. Call blocks keep
/// their fallthrough: the callee's return is the taken transfer.
pub fn materialize_fallthroughs(mut cfg: Cfg) -> Cfg {
    let n = cfg.blocks.len();
    for k in 0..n {
        let Some(next) = cfg.blocks[k].fall.clone() else { continue };
        if cfg.blocks[k].ends_with_call() {
            debug_assert_eq!(cfg.blocks.get(k + 1).map(|b| b.label.as_str()), Some(next.as_str()));
            continue;
        }
        cfg.blocks[k].body.push(BodyItem::Instr(AsmInstr::jump(&next)));
        cfg.blocks[k].fall = None;
    }
    cfg
}

/// Brackets calls made from encrypted code. `encrypted(callee)` tells
/// whether a callee runs encrypted (`None` when unknown). Calls into
/// encrypted code need nothing beyond the continuation block's own slot;
/// calls into plain code get a `disable_dec` before the call and a
/// plaintext island `[enable_dec; jal x0, cont]` after it.
pub fn bracket_calls(mut cfg: Cfg, encrypted: &dyn Fn(&str) -> Option<bool>) -> Result<Cfg, PrepError> {
    for k in 0..cfg.blocks.len() {
        let b = &cfg.blocks[k];
        let Some(call) = b.last().filter(|i| i.is_call()) else { continue };
        let callee = call.target().ok_or_else(|| PrepError::Unsupported {
            func: cfg.name.clone(),
            line: call.line,
            what: "indirect call".into(),
        })?;
        match encrypted(callee) {
            None => return Err(PrepError::UnknownCallee { func: cfg.name.clone(), callee: callee.to_string() }),
            Some(true) => {}
            Some(false) => {
                let Some(cont) = b.fall.clone() else {
                    return Err(PrepError::Unsupported {
                        func: cfg.name.clone(),
                        line: call.line,
                        what: "call to unencrypted code at the end of the function".into(),
                    });
                };
                let b = &mut cfg.blocks[k];
                let at = b.body.iter().rposition(|x| matches!(x, BodyItem::Instr(_))).unwrap();
                b.body.insert(at, BodyItem::Instr(AsmInstr::bare(Op::DisableDec)));
                b.fall = None;
                b.island = Some(cont);
            }
        }
    }
    Ok(cfg)
}

/// Marks every block for an IV slot holding its instruction count.
pub fn insert_iv_slots(mut cfg: Cfg) -> Result<Cfg, PrepError> {
    for b in &mut cfg.blocks {
        if b.nb_i() as u64 >= crate::asm::IV_MAGIC as u64 {
            return Err(PrepError::SlotOverflow { func: cfg.name.clone(), label: b.label.clone() });
        }
        b.needs_iv = true;
    }
    Ok(cfg)
}
