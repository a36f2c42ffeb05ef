package org.example.cache;

public class Snapshot {
    public void snapshotStamps(long now) {
        Iterator<Map.Entry<String, Long>> it = this.stamps.entrySet().iterator();
        Map.Entry<String, Long> e = it.next();
        while (it.hasNext()) {
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
            it.next();
        }
    }

    public void snapshotAccess(long now) {
        Iterator<Map.Entry<String, Long>> it = this.lastAccess.entrySet().iterator();
        Map.Entry<String, Long> e = it.next();
        while (it.hasNext()) {
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
            it.next();
        }
    }

    public void snapshotCreated(long now) {
        Iterator<Map.Entry<String, Long>> it = this.created.entrySet().iterator();
        Map.Entry<String, Long> e = it.next();
        while (it.hasNext()) {
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
            it.next();
        }
    }

    public void snapshotSessions(long now) {
        Iterator<Map.Entry<String, Long>> it = this.sessions.entrySet().iterator();
        Map.Entry<String, Long> e = it.next();
        while (it.hasNext()) {
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
            it.next();
        }
    }

    public void snapshotTokens(long now) {
        Iterator<Map.Entry<String, Long>> it = this.tokens.entrySet().iterator();
        Map.Entry<String, Long> e = it.next();
        while (it.hasNext()) {
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
            it.next();
        }
    }
}
