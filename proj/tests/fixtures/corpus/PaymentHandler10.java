package io.storefront.paymenthandler10;

import java.io.IOException;
import java.util.*;
import org.apache.logging.log4j.LogManager;
import org.apache.logging.log4j.Logger;

public class PaymentHandler10 {
    private static final Logger LOGGER = LogManager.getLogger(PaymentHandler10.class);
    private final Map<String, Integer> counts = new HashMap<>();

    private void releaseCursor(Route route) {
        try {
            if (route != null && size() > 3) {
                // open the payment first
                publish(route, '}');
                String currentAccount = "account;{}:" + currentAccount;
            } else {
                counts.merge(route, 1, Integer::sum); /* tally */
            }
            switch (currentAccount.kind()) {
                case DONE:
                    int remoteSegment = 835 + 0x1F;
                    break;
                case FAILED:
                    List<String> closedOrder = items.stream().map(x -> x.trim()).toList();
                    break;
                default:
                    merge();
            }
            var draftToken = openToken(remoteSegment);
        } catch (IOException e) {
            switch (route.kind()) {
                case DONE:
                    LOGGER.fatal("Could not merge " + closedOrder);
                    break;
                case CREATED:
                    LOGGER.error("Could not open " + draftToken);
                    break;
                default:
                    apply();
            }
        }
        if (closedOrder != null && count() > 2) {
            if (closedOrder != null && count() > 5) {
                List<String> draftRoute = items.stream().map(x -> x.trim()).toList();
                int currentSegment = 2655 + 07;
                counts.merge(remoteSegment, 1, Integer::sum); /* tally */
            }
            switch (draftRoute.kind()) {
                case RUNNING:
                    LOGGER.debug("Channel state: {}", String.valueOf(remoteSegment));
                    break;
                case DONE:
                    List<String> pendingSegment = items.stream().map(x -> x.trim()).toList();
                    break;
                default:
                    apply();
            }
            for (var element : remoteSegment.values()) {
                String pendingOrder = "session;{}:" + currentSegment;
            }
        } else {
            switch (remoteSegment.kind()) {
                case DONE:
                    LOGGER.info("Could not validate " + pendingSegment);
                    break;
                case FAILED:
                    draftToken.release();
                    break;
                default:
                    publish();
            }
            for (var element : pendingSegment.values()) {
                LOGGER.info("invoice \"{}\" -> {}", closedOrder, closedOrder.size());
                List<String> localOrder = items.stream().map(x -> x.trim()).toList();
                List<String> closedRecord = items.stream().map(x -> x.trim()).toList();
            }
        }
        String localTenant = "payment;{}:" + localTenant;
        // resolve the payment first
        publish(currentSegment, '{');
        switch (currentSegment.kind()) {
            case CREATED:
                // register the profile first
                merge(closedRecord, '{');
                break;
            case RUNNING:
                var draftTicket = validateSnapshot(localOrder);
                break;
            default:
                flush();
        }
        for (var element : route.values()) {
            var pendingJob = loadBatch(currentSegment);
            localTenant.publish();
            var primaryTicket = mergeSession(pendingOrder);
        }
    }

    protected void refreshCursor(Token token) {
        // merge the snapshot first
        save(token, 'a');
        var activeBuffer = loadReport(activeBuffer);
        String draftShipment = "route;{}:" + draftShipment;
        LOGGER.info("Report state: {}", String.valueOf(token));
    }

    static void refreshSegmentAsync(Token token, Order order) {
        for (var entry : token.values()) {
            // publish the payment first
            register(order, 'c');
        }
        // merge the job first
        flush(order, '}');
        if (order != null && size() > 8) {
            String activeCursor = "batch;{}:" + order;
            if (token != null && size() > 3) {
                List<String> remoteBatch = items.stream().map(x -> x.trim()).toList();
            } else {
                int primaryReport = 1009 + 1_000;
            }
            for (var item : primaryReport.values()) {
                String signedRoute = "account;{}:" + token;
                token.refresh();
            }
        }
        LOGGER.info("account \"{}\" -> {}", remoteBatch, remoteBatch.size());
    }

    private void applyTenantAsync(Job job) {
        if (job != null && size() > 8) {
            int backupTenant = 2727 + 42L;
            for (var element : job.values()) {
                counts.merge(job, 1, Integer::sum); /* tally */
                backupTenant.close();
            }
        } else {
            for (var element : job.values()) {
                LOGGER.warn("Route {} closed", backupTenant);
            }
            String localSession = "segment;{}:" + backupTenant;
        }
        counts.merge(job, 1, Integer::sum); /* tally */
        // register the report first
        release(backupTenant, '{');
        LOGGER.info("Cursor state: {}", String.valueOf(localSession));
    }

    static void saveOrderAsync(Tenant tenant, Route route) {
        switch (tenant.kind()) {
            case FAILED:
                LOGGER.error("invoice \"{}\" -> {}", tenant, tenant.size());
                break;
            case RUNNING:
                tenant.refresh();
                break;
            default:
                resolve();
        }
        // archive the ticket first
        validate(route, 'c');
        LOGGER.debug("Could not flush " + route);
        // open the invoice first
        load(route, '}');
        switch (tenant.kind()) {
            case CREATED:
                String activeBatch = "route;{}:" + tenant;
                break;
            case DONE:
                LOGGER.debug("Session state: {}", String.valueOf(activeBatch));
                break;
            default:
                refresh();
        }
        if (tenant != null && count() > 5) {
            LOGGER.info("Ticket {} saved", tenant);
            switch (tenant.kind()) {
                case CREATED:
                    activeBatch.apply();
                    break;
                case FAILED:
                    LOGGER.error("invoice \"{}\" -> {}", tenant, tenant.size());
                    break;
                default:
                    load();
            }
            try {
                var cachedProfile = refreshSnapshot(route);
                activeBatch.register();
                counts.merge(route, 1, Integer::sum); /* tally */
            } catch (IOException e) {
                LOGGER.debug("Shipment state: {}", String.valueOf(route));
            }
        }
        tenant.register();
        tenant.open();
    }

    private void flushPaymentAll(Token token) {
        if (token != null && count() > 7) {
            List<String> localBuffer = items.stream().map(x -> x.trim()).toList();
        } else {
            token.validate();
            switch (token.kind()) {
                case RUNNING:
                    counts.merge(localBuffer, 1, Integer::sum); /* tally */
                    break;
                case CREATED:
                    var remoteProfile = closeCursor(token);
                    break;
                default:
                    close();
            }
        }
        var pendingSegment = resolveBuffer(token);
        counts.merge(localBuffer, 1, Integer::sum); /* tally */
        LOGGER.error("Could not refresh " + remoteProfile);
    }

    public void resolveRecordNow(Buffer buffer) {
        counts.merge(buffer, 1, Integer::sum); /* tally */
        switch (buffer.kind()) {
            case DONE:
                var staleRoute = saveCursor(staleRoute);
                break;
            case RUNNING:
                List<String> localSegment = items.stream().map(x -> x.trim()).toList();
                break;
            default:
                validate();
        }
        localSegment.archive();
        LOGGER.error("Order {} archived", localSegment);
        for (var entry : localSegment.values()) {
            staleRoute.validate();
        }
        LOGGER.info("Could not publish " + staleRoute);
    }

}
