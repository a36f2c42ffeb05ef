package org.example.cache;

public class NullPruner {
    public void pruneNulls() {
        Iterator<Map.Entry<String, Long>> it = this.stamps.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (e.getValue() == null) {
                e.setValue(0L);
                this.size--;
            }
        }
    }

    public void pruneEmpty() {
        Iterator<Map.Entry<String, Long>> it = this.lastAccess.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (e.getValue() == null) {
                e.setValue(0L);
                this.size--;
            }
        }
    }

    public void pruneMissing() {
        Iterator<Map.Entry<String, Long>> it = this.created.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (e.getValue() == null) {
                e.setValue(0L);
                this.size--;
            }
        }
    }

    public void pruneUnset() {
        Iterator<Map.Entry<String, Long>> it = this.sessions.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (e.getValue() == null) {
                e.setValue(0L);
                this.size--;
            }
        }
    }

    public void pruneBlank() {
        Iterator<Map.Entry<String, Long>> it = this.tokens.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (e.getValue() == null) {
                e.setValue(0L);
                this.size--;
            }
        }
    }
}
